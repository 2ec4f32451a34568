#pragma once

#include "verlinde/chebyshev.hpp"
#include "verlinde/laurent.hpp"
#include "verlinde/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace verlinde {

// Formal sum of indecomposable tilting modules: weight -> multiplicity >= 1.
struct TiltingClass {
  std::map<std::int64_t, Integer> summands;

  static TiltingClass single(std::int64_t weight, Integer mult = 1);
  Integer multiplicity(std::int64_t weight) const;
  bool is_zero() const { return summands.empty(); }
  TiltingClass& operator+=(const TiltingClass& o);
  friend TiltingClass operator+(TiltingClass a, const TiltingClass& b) { return a += b; }
  friend TiltingClass operator*(const Integer& c, const TiltingClass& a);
  bool operator==(const TiltingClass&) const = default;
  std::string to_string() const;
};

// Sum of [u]_t over u in desc(v+1).
LaurentPoly tilting_character(const Levels& lv, std::int64_t v);
LaurentPoly character(const Levels& lv, const TiltingClass& c);
// Peels a symmetric character into tilting characters from the top down.
TiltingClass decompose_character(const Levels& lv, const LaurentPoly& ch);
TiltingClass fuse(const Levels& lv, const TiltingClass& a, const TiltingClass& b);
TiltingClass fuse(const Levels& lv, std::int64_t a, std::int64_t b);
// Character of a class of the classical context (l' = p) with t -> t^l.
LaurentPoly frobenius_twist(const Levels& lv, const TiltingClass& classical);
// Drops summands T(v) with v >= p^(m) - 1.
TiltingClass truncate_to_level(const Levels& lv, const TiltingClass& c, int m);
// Evaluates an integer polynomial with nonnegative coefficients at a class,
// using fusion for products.
TiltingClass evaluate_at(const Levels& lv, const IntPoly& f, const TiltingClass& x);

// |desc(v) cap desc(w)|; the dimension of Hom(T(v-1), T(w-1)).
std::int64_t common_descendants(const Levels& lv, std::int64_t v, std::int64_t w);

}  // namespace verlinde
