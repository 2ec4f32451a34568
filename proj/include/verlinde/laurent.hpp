#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace verlinde {

using Integer = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in t with integer coefficients. Zero coefficients
// are never stored, so two polynomials are equal iff their maps are.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Integer coeff = 1);

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int exponent) const;
  int max_exponent() const;  // requires !is_zero()
  int min_exponent() const;

  void add_term(int exponent, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Integer& c, const LaurentPoly& a);
  bool operator==(const LaurentPoly&) const = default;

  // t -> t^k
  LaurentPoly substitute_power(int k) const;
  // Invariant under t -> t^{-1}.
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

}  // namespace verlinde
