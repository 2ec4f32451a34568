#pragma once

#include "verlinde/laurent.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace verlinde {

bool is_prime(std::uint64_t n);
// Prime factors with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);
// Smallest d >= 1 with p^d = 1 mod m (d = 1 when m = 1).
int multiplicative_order(std::uint64_t p, std::uint64_t m);

class FieldScalar;

// F_{p^d} as F_p[x]/(f) with f the lexicographically smallest monic
// irreducible of degree d. "Lexicographic" compares (c_{d-1}, ..., c_0), i.e.
// the integer c_0 + c_1 p + ... + c_{d-1} p^{d-1}.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  static std::shared_ptr<const GaloisField> create(int p, int degree);

  int characteristic() const { return p_; }
  int degree() const { return d_; }
  std::uint64_t order() const { return q_; }
  // Monic, ascending, size d+1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldScalar zero() const;
  FieldScalar one() const;
  FieldScalar from_int(long long v) const;
  FieldScalar element(std::vector<int> coords) const;
  // Element whose coordinates are the base-p digits of code.
  FieldScalar from_code(std::uint64_t code) const;
  // First generator of the multiplicative group in ascending code order.
  FieldScalar primitive_element() const;

  std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b) const;

 private:
  GaloisField(int p, int d, std::vector<int> modulus, std::uint64_t q)
      : p_(p), d_(d), q_(q), modulus_(std::move(modulus)) {}
  int p_;
  int d_;
  std::uint64_t q_;
  std::vector<int> modulus_;
};

class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(std::shared_ptr<const GaloisField> f, std::vector<int> coords);

  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const { return field_; }
  const std::vector<int>& coordinates() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  // Negative exponents allowed for nonzero elements.
  FieldScalar pow(long long e) const;
  // Multiplicative order; requires nonzero.
  std::uint64_t order() const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }
  bool operator<(const FieldScalar& o) const { return c_ < o.c_; }

  std::string to_string() const;

 private:
  void check_same(const FieldScalar& o) const;
  std::shared_ptr<const GaloisField> field_;
  std::vector<int> c_;
};

// The combinatorial data (p, l, n). Everything except the field-valued
// quantities depends on this alone.
struct Levels {
  int p = 0;
  int ell = 0;
  int n = 0;

  // p^(k) = l p^{k-1} for k >= 1, p^(0) = 1.
  std::int64_t power(int k) const;
  std::int64_t top() const { return power(n); }
  // Number of simple objects: p^(n) - p^(n-1).
  std::int64_t rank() const { return power(n) - power(n - 1); }
  bool operator==(const Levels&) const = default;
};

// Checks p prime, l >= 2, l = p or p does not divide l, n >= 1.
Levels make_levels(int p, int ell, int n);
// The classical context (p, l' = p) at level m.
Levels sigma_levels(const Levels& lv, int m);

int derive_ell(int p, int N);
// Validates (p, N, n) without building a field.
Levels derive_levels(int p, int N, int n);

struct ParamContext {
  int p = 0;
  int N = 0;
  int ell = 0;
  int n = 0;
  int sigma = 1;
  int d = 0;
  int zeta_sqrt_selector = 0;
  Levels levels;
  std::shared_ptr<const GaloisField> field;
  FieldScalar zeta;
  FieldScalar zeta_sqrt;

  std::int64_t power(int k) const { return levels.power(k); }
};

// Fields larger than 2^62 elements are rejected.
ParamContext make_context(int p, int N, int n = 1, int zeta_sqrt_selector = 0);

// [m]_q = q^{-(m-1)} + q^{-(m-3)} + ... + q^{m-1}; odd in m.
FieldScalar quantum_integer(const FieldScalar& q, long long m);
FieldScalar quantum_integer_field(const ParamContext& ctx, long long m);
LaurentPoly quantum_integer_laurent(long long m);
FieldScalar evaluate(const LaurentPoly& f, const FieldScalar& t);
// (zeta^{1/2})^m
FieldScalar zeta_half_power(const ParamContext& ctx, long long m);

// sin(m power pi / p^(n)) / sin(power pi / p^(n))
double fpdim_quantum(const Levels& lv, long long m, std::int64_t power);

}  // namespace verlinde
