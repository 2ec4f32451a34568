#include "verlinde/laurent.hpp"

#include "verlinde/error.hpp"

#include <sstream>

namespace verlinde {

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly r;
  r.add_term(exponent, coeff);
  return r;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::max_exponent() const {
  ensure(!terms_.empty(), "max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_exponent() const {
  ensure(!terms_.empty(), "min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator*(const Integer& c, const LaurentPoly& a) {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (c != 1 || it->first == 0) os << c;
    if (it->first != 0) {
      os << "t";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

}  // namespace verlinde
