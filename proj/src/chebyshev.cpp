#include "verlinde/chebyshev.hpp"

#include "verlinde/error.hpp"

#include <sstream>

namespace verlinde {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::x_power(int k) {
  std::vector<Integer> c(k + 1, 0);
  c[k] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> r = a.c_;
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

bool IntPoly::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

bool IntPoly::is_odd() const {
  for (std::size_t i = 0; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

bool IntPoly::nonnegative() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

double IntPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPoly IntPoly::compose(const IntPoly& g) const {
  IntPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

LaurentPoly IntPoly::evaluate_laurent(const LaurentPoly& x) const {
  LaurentPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    acc.add_term(0, *it);
  }
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Integer c = c_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero() && b.leading() == 1, "divmod_monic: divisor must be monic");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<Integer> q(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    const Integer c = r[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeffs()[i];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// ---------------------------------------------------------------------------

ModPPoly::ModPPoly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (int& c : c_) c = ((c % p_) + p_) % p_;
  trim();
}

ModPPoly ModPPoly::from_int_poly(const IntPoly& f, int p) {
  std::vector<int> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    Integer r = x % p;
    if (r < 0) r += p;
    c.push_back(r.convert_to<int>());
  }
  return ModPPoly(p, std::move(c));
}

void ModPPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPPoly operator*(const ModPPoly& a, const ModPPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPPoly(a.p_, {});
  std::vector<int> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a.c_[i]) * b.c_[j]) % a.p_);
  return ModPPoly(a.p_, std::move(r));
}

namespace {

int inv_mod(int a, int p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

}  // namespace

ModPPoly ModPPoly::monic() const {
  if (c_.empty()) return *this;
  const long long inv = inv_mod(c_.back(), p_);
  std::vector<int> r = c_;
  for (int& c : r) c = static_cast<int>(c * inv % p_);
  return ModPPoly(p_, std::move(r));
}

std::pair<ModPPoly, ModPPoly> divmod(const ModPPoly& a, const ModPPoly& b) {
  require(!b.is_zero(), "divmod: division by zero polynomial");
  require(a.prime() == b.prime(), "divmod: mismatched characteristic");
  const int p = a.prime();
  std::vector<int> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ModPPoly(p, {}), a};
  std::vector<int> q(a.degree() - db + 1, 0);
  const long long inv = inv_mod(b.coeffs().back(), p);
  for (int k = a.degree(); k >= db; --k) {
    const long long c = r[k] * inv % p;
    if (c == 0) continue;
    q[k - db] = static_cast<int>(c);
    for (int i = 0; i <= db; ++i)
      r[k - db + i] = static_cast<int>(((r[k - db + i] - c * b.coeffs()[i]) % p + p) % p);
  }
  return {ModPPoly(p, std::move(q)), ModPPoly(p, std::move(r))};
}

ModPPoly gcd(ModPPoly a, ModPPoly b) {
  while (!b.is_zero()) {
    ModPPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------

IntPoly cheb_q(int k) {
  require(k >= 1, "cheb_q: index must be positive");
  IntPoly prev;  // Q_0 = 0
  IntPoly cur = IntPoly::constant(1);
  const IntPoly x = IntPoly::x_power(1);
  for (int i = 1; i < k; ++i) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<IntPoly, IntPoly> cheb_split(int k) {
  const IntPoly q = cheb_q(k);
  std::vector<Integer> plus(q.coeffs().size(), 0), minus(q.coeffs().size(), 0);
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
    const Integer& c = q.coeffs()[i];
    if (c > 0) plus[i] = c;
    else minus[i] = -c;
  }
  return {IntPoly(std::move(plus)), IntPoly(std::move(minus))};
}

IntPoly verlinde_modulus(const Levels& lv) {
  const auto top = lv.top();
  const auto below = lv.power(lv.n - 1);
  require(top < (1 << 20), "verlinde_modulus: p^(n) too large");
  auto [q, r] = divmod_monic(cheb_q(static_cast<int>(top)), cheb_q(static_cast<int>(below)));
  ensure(r.is_zero(), "verlinde_modulus: Q_{p^(n-1)} does not divide Q_{p^(n)}");
  ensure(q.degree() == top - below, "verlinde_modulus: unexpected degree");
  return q;
}

bool cheb_character_identity_check(int k) {
  const LaurentPoly x = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  return cheb_q(k).evaluate_laurent(x) == quantum_integer_laurent(k);
}

StableModulus stable_modulus(const Levels& lv) {
  require(lv.n >= 2, "stable_modulus: requires n >= 2");
  const ModPPoly m = ModPPoly::from_int_poly(verlinde_modulus(lv), lv.p);
  const ModPPoly q = ModPPoly::from_int_poly(cheb_q(static_cast<int>(lv.power(lv.n - 1))), lv.p);
  ModPPoly g = gcd(m, q);
  const int dim = g.degree();
  return {std::move(g), dim};
}

namespace {

int strip_factor(ModPPoly& f, const ModPPoly& factor) {
  int e = 0;
  while (f.degree() >= factor.degree()) {
    auto [q, r] = divmod(f, factor);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++e;
  }
  return e;
}

}  // namespace

StableDecomposition stable_decomposition(const Levels& lv) {
  require(lv.ell != lv.p, "stable_decomposition: requires l != p");
  ModPPoly rest = stable_modulus(lv).generator;
  const int p = lv.p;
  StableDecomposition out;
  out.q_ell_multiplicity = strip_factor(rest, ModPPoly::from_int_poly(cheb_q(lv.ell), p));
  out.local_dimension = out.q_ell_multiplicity * (lv.ell - 1);
  out.rest_dimension = rest.degree();
  if (p == 2) {
    out.rest_root_multiplicities.push_back(strip_factor(rest, ModPPoly(p, {0, 1})));
  } else {
    out.rest_root_multiplicities.push_back(strip_factor(rest, ModPPoly(p, {-2, 1})));
    out.rest_root_multiplicities.push_back(strip_factor(rest, ModPPoly(p, {2, 1})));
  }
  out.rest_supported = rest.degree() == 0;
  return out;
}

int stable_decomposition_dimension(const Levels& lv) {
  require(lv.n >= 2, "stable_decomposition_dimension: requires n >= 2");
  const std::int64_t e = sigma_levels(lv, lv.n - 1).power(lv.n - 2);  // p^{n-2}
  if (lv.p == 2) return static_cast<int>((lv.ell - 1) * e + (e - 1));
  return static_cast<int>((lv.ell - 1) * e + 2 * ((e - 1) / 2));
}

PlusPart plus_part(const Levels& lv) {
  const IntPoly m = verlinde_modulus(lv);
  PlusPart out{};
  std::vector<Integer> r;
  if (m.is_even()) {
    for (int k = 0; k <= m.degree(); k += 2) r.push_back(m.coeff(k));
  } else {
    ensure(m.is_odd(), "plus_part: modulus has mixed parity");
    out.has_x_factor = true;
    for (int k = 1; k <= m.degree(); k += 2) r.push_back(m.coeff(k));
  }
  out.poly = IntPoly(std::move(r)).compose(IntPoly({2, 1}));
  return out;
}

}  // namespace verlinde
