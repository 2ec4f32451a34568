#include "verlinde/tilting.hpp"

#include "verlinde/error.hpp"
#include "verlinde/padic.hpp"

#include <algorithm>
#include <sstream>

namespace verlinde {

TiltingClass TiltingClass::single(std::int64_t weight, Integer mult) {
  TiltingClass c;
  if (mult != 0) c.summands.emplace(weight, std::move(mult));
  return c;
}

Integer TiltingClass::multiplicity(std::int64_t weight) const {
  auto it = summands.find(weight);
  return it == summands.end() ? Integer(0) : it->second;
}

TiltingClass& TiltingClass::operator+=(const TiltingClass& o) {
  for (const auto& [w, m] : o.summands) summands[w] += m;
  return *this;
}

TiltingClass operator*(const Integer& c, const TiltingClass& a) {
  TiltingClass r;
  if (c == 0) return r;
  for (const auto& [w, m] : a.summands) r.summands.emplace(w, c * m);
  return r;
}

std::string TiltingClass::to_string() const {
  if (summands.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = summands.rbegin(); it != summands.rend(); ++it) {
    os << (first ? "" : " + ");
    if (it->second != 1) os << it->second << "*";
    os << "T(" << it->first << ")";
    first = false;
  }
  return os.str();
}

LaurentPoly tilting_character(const Levels& lv, std::int64_t v) {
  require(v >= 0, "tilting_character: negative weight");
  LaurentPoly ch;
  for (std::int64_t u : descendants(lv, v + 1)) ch += quantum_integer_laurent(u);
  return ch;
}

LaurentPoly character(const Levels& lv, const TiltingClass& c) {
  LaurentPoly ch;
  for (const auto& [w, m] : c.summands) ch += m * tilting_character(lv, w);
  return ch;
}

TiltingClass decompose_character(const Levels& lv, const LaurentPoly& ch) {
  require(ch.is_symmetric(), "decompose_character: character is not symmetric");
  TiltingClass out;
  LaurentPoly rest = ch;
  while (!rest.is_zero()) {
    const int top = rest.max_exponent();
    const Integer c = rest.coeff(top);
    ensure(top >= 0 && c > 0, "decompose_character: negative multiplicity while peeling");
    out.summands.emplace(top, c);
    rest -= c * tilting_character(lv, top);
  }
  return out;
}

TiltingClass fuse(const Levels& lv, const TiltingClass& a, const TiltingClass& b) {
  return decompose_character(lv, character(lv, a) * character(lv, b));
}

TiltingClass fuse(const Levels& lv, std::int64_t a, std::int64_t b) {
  return fuse(lv, TiltingClass::single(a), TiltingClass::single(b));
}

LaurentPoly frobenius_twist(const Levels& lv, const TiltingClass& classical) {
  return character(sigma_levels(lv, 1), classical).substitute_power(lv.ell);
}

TiltingClass truncate_to_level(const Levels& lv, const TiltingClass& c, int m) {
  TiltingClass out;
  const std::int64_t bound = lv.power(m) - 1;
  for (const auto& [w, mult] : c.summands)
    if (w < bound) out.summands.emplace(w, mult);
  return out;
}

TiltingClass evaluate_at(const Levels& lv, const IntPoly& f, const TiltingClass& x) {
  require(f.nonnegative(), "evaluate_at: coefficients must be nonnegative");
  TiltingClass acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc.is_zero() ? TiltingClass{} : fuse(lv, acc, x);
    acc += TiltingClass::single(0, *it);
  }
  return acc;
}

std::int64_t common_descendants(const Levels& lv, std::int64_t v, std::int64_t w) {
  const auto a = descendants(lv, v);
  const auto b = descendants(lv, w);
  std::vector<std::int64_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return static_cast<std::int64_t>(both.size());
}

}  // namespace verlinde
