#pragma once

#include "verlinde/laurent.hpp"
#include "verlinde/scalars.hpp"

#include <string>
#include <utility>
#include <vector>

namespace verlinde {

// Dense integer polynomial, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(Integer c);
  static IntPoly x_power(int k);

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Integer coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Integer(0); }
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  bool operator==(const IntPoly&) const = default;

  bool is_even() const;  // only even powers
  bool is_odd() const;   // only odd powers
  bool nonnegative() const;

  double evaluate(double x) const;
  // f(g)
  IntPoly compose(const IntPoly& g) const;
  LaurentPoly evaluate_laurent(const LaurentPoly& x) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Division by a monic polynomial: exact over Z.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

// Dense polynomial over F_p, ascending, no trailing zeros.
class ModPPoly {
 public:
  ModPPoly(int p, std::vector<int> coeffs);
  static ModPPoly from_int_poly(const IntPoly& f, int p);

  int prime() const { return p_; }
  const std::vector<int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  friend ModPPoly operator*(const ModPPoly& a, const ModPPoly& b);
  bool operator==(const ModPPoly&) const = default;
  ModPPoly monic() const;

 private:
  void trim();
  int p_;
  std::vector<int> c_;
};

std::pair<ModPPoly, ModPPoly> divmod(const ModPPoly& a, const ModPPoly& b);
ModPPoly gcd(ModPPoly a, ModPPoly b);  // monic

// Q_1 = 1, Q_2 = x, Q_{k+1} = x Q_k - Q_{k-1}.
IntPoly cheb_q(int k);
// Q_k = Q+ - Q- with both parts nonnegative.
std::pair<IntPoly, IntPoly> cheb_split(int k);
// Q_{p^(n)} / Q_{p^(n-1)}, degree p^(n) - p^(n-1).
IntPoly verlinde_modulus(const Levels& lv);
bool cheb_character_identity_check(int k);

struct StableModulus {
  ModPPoly generator;  // gcd of the modulus and Q_{p^(n-1)} over F_p
  int dimension;
};
// Requires n >= 2.
StableModulus stable_modulus(const Levels& lv);
// Splits the stable generator as Q_l^e * R over F_p. R should only vanish
// at x = +-2 (p odd, equal multiplicities) or at x = 0 (p = 2).
struct StableDecomposition {
  int q_ell_multiplicity = 0;  // e, expected p^{n-2}
  int local_dimension = 0;     // e (l - 1)
  int rest_dimension = 0;      // deg R, expected p^{n-2} - 1
  std::vector<int> rest_root_multiplicities;  // at 2, -2 (p odd) or at 0 (p = 2)
  bool rest_supported = false;                // R has no other roots
  int total() const { return local_dimension + rest_dimension; }
};
StableDecomposition stable_decomposition(const Levels& lv);
// Dimension read off the closed form of the decomposition.
int stable_decomposition_dimension(const Levels& lv);

// The modulus as P(x^2 - 2) or x P(x^2 - 2); returns P and whether the
// extra factor x is present.
struct PlusPart {
  IntPoly poly;
  bool has_x_factor;
};
PlusPart plus_part(const Levels& lv);

}  // namespace verlinde
