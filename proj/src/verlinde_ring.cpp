#include "verlinde/verlinde_ring.hpp"

#include "verlinde/error.hpp"
#include "verlinde/padic.hpp"

#include <cmath>
#include <numbers>

namespace verlinde {

VerlindeRing::VerlindeRing(const Levels& lv) : lv_(lv), modulus_(verlinde_modulus(lv)) {
  const std::int64_t top = lv.top();
  const IntPoly x = IntPoly::x_power(1);
  q_.reserve(top + 1);
  q_.push_back(RingElement{});       // Q_0 = 0
  q_.push_back(one());               // Q_1 = 1
  for (std::int64_t k = 2; k <= top; ++k)
    q_.push_back(reduce(x * q_[k - 1].poly - q_[k - 2].poly));

  const auto rank = lv.rank();
  simples_.reserve(rank);
  if (lv.n == 1) {
    for (std::int64_t a = 0; a < rank; ++a) simples_.push_back(q_[a + 1]);
    return;
  }
  sigma_ = std::make_unique<VerlindeRing>(sigma_levels(lv, lv.n - 1));
  u_ = add(tilting_class(lv.ell), reduce(Integer(-2) * tilting_class(lv.ell - 2).poly));
  ensure(phi_well_defined(), "VerlindeRing: classical modulus does not vanish at u");
  for (std::int64_t a = 0; a < rank; ++a) {
    const std::int64_t a0 = a % lv.ell;
    const std::int64_t b = a / lv.ell;
    simples_.push_back(multiply(q_[a0 + 1], phi(sigma_->simple_class(b))));
  }
}

RingElement VerlindeRing::reduce(const IntPoly& f) const { return RingElement{divmod_monic(f, modulus_).second}; }

RingElement VerlindeRing::add(const RingElement& a, const RingElement& b) const { return RingElement{a.poly + b.poly}; }

RingElement VerlindeRing::multiply(const RingElement& a, const RingElement& b) const {
  return reduce(a.poly * b.poly);
}

RingElement VerlindeRing::tilting_class(std::int64_t m) const {
  require(m >= 0 && m <= lv_.top() - 2, "tilting_class: weight outside 0..p^(n)-2");
  IntPoly acc;
  for (std::int64_t u : descendants(lv_, m + 1)) acc += q_[u].poly;
  return RingElement{acc};
}

RingElement VerlindeRing::u_class() const {
  require(lv_.n >= 2, "u_class: requires n >= 2");
  return u_;
}

RingElement VerlindeRing::phi(const RingElement& classical) const {
  require(lv_.n >= 2, "phi: requires n >= 2");
  RingElement acc;
  const auto& c = classical.poly.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = add(multiply(acc, u_), reduce(IntPoly::constant(*it)));
  return acc;
}

bool VerlindeRing::phi_well_defined() const {
  if (lv_.n < 2) return true;
  return phi(RingElement{sigma_->modulus()}).poly.is_zero();
}

void VerlindeRing::check_simple(std::int64_t a) const {
  require(a >= 0 && a < rank(), "simple index outside 0..p^(n)-p^(n-1)-1");
}

const RingElement& VerlindeRing::simple_class(std::int64_t a) const {
  check_simple(a);
  return simples_[a];
}

std::vector<std::vector<Integer>> VerlindeRing::basis_matrix() const {
  const int D = rank();
  std::vector<std::vector<Integer>> m(D, std::vector<Integer>(D, 0));
  for (int a = 0; a < D; ++a)
    for (int k = 0; k < D; ++k) m[k][a] = simples_[a].poly.coeff(k);
  return m;
}

std::vector<Integer> VerlindeRing::express_in_simples(const RingElement& r) const {
  const int D = rank();
  std::vector<Integer> out(D, 0);
  IntPoly rest = reduce(r.poly).poly;
  for (int k = D - 1; k >= 0; --k) {
    const Integer c = rest.coeff(k);
    if (c == 0) continue;
    ensure(simples_[k].poly.degree() == k && simples_[k].poly.leading() == 1,
           "express_in_simples: simple basis is not unitriangular");
    out[k] = c;
    rest -= c * simples_[k].poly;
  }
  ensure(rest.is_zero(), "express_in_simples: nonzero remainder");
  return out;
}

std::vector<Integer> VerlindeRing::fuse_simples(std::int64_t a, std::int64_t b) const {
  check_simple(a);
  check_simple(b);
  auto out = express_in_simples(multiply(simples_[a], simples_[b]));
  for (const auto& c : out) ensure(c >= 0, "fuse_simples: negative fusion coefficient");
  return out;
}

std::int64_t VerlindeRing::projective_cover_index(std::int64_t a) const {
  check_simple(a);
  if (lv_.n == 1) return a;
  const std::int64_t a0 = a % lv_.ell;
  const std::int64_t r = sigma_->projective_cover_index(a / lv_.ell);
  return 2 * lv_.ell - 2 - a0 + lv_.ell * r;
}

std::int64_t VerlindeRing::projective_cover_index_closed_form(std::int64_t a) const {
  check_simple(a);
  if (lv_.n == 1) return a;
  const PlExpansion e = pl_expand(lv_, a);
  std::vector<int> d(lv_.n, 0);
  d[0] = lv_.ell - 1 - e.digit(0);
  for (int i = 1; i + 1 < lv_.n; ++i) d[i] = lv_.p - 1 - e.digit(i);
  d[lv_.n - 1] = e.digit(lv_.n - 1);
  return lv_.power(lv_.n - 1) - 1 + pl_value(lv_, d);
}

std::vector<Integer> VerlindeRing::chebyshev_coordinates(const RingElement& r) const {
  IntPoly rest = r.poly;
  std::vector<Integer> out(std::max(rest.degree() + 1, 0), 0);
  for (int k = rest.degree(); k >= 0; --k) {
    const Integer c = rest.coeff(k);
    if (c == 0) continue;
    out[k] = c;
    rest -= c * q_[k + 1].poly;  // Q_{k+1} is monic of degree k and k < deg modulus
  }
  ensure(rest.is_zero(), "chebyshev_coordinates: nonzero remainder");
  return out;
}

double VerlindeRing::fpdim(const RingElement& r) const {
  // Q_k(2 cos t) = sin(k t) / sin(t); summing in this basis avoids the
  // cancellation of large alternating x-coefficients.
  const double t = std::numbers::pi / static_cast<double>(lv_.top());
  const auto c = chebyshev_coordinates(r);
  double acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) acc += c[k].convert_to<double>() * std::sin(static_cast<double>(k + 1) * t) / std::sin(t);
  return acc;
}

double VerlindeRing::fpdim_simple(std::int64_t a) const {
  check_simple(a);
  const PlExpansion e = pl_expand(lv_, a);
  double acc = 1;
  for (int i = 0; i < static_cast<int>(e.digits.size()); ++i)
    acc *= fpdim_quantum(lv_, e.digits[i] + 1, lv_.power(i));
  return acc;
}

double VerlindeRing::fpdim_category() const {
  const double P = static_cast<double>(lv_.top());
  const double s = std::sin(std::numbers::pi / P);
  return P / (2 * s * s);
}

std::vector<std::int64_t> VerlindeRing::list_invertibles() const {
  std::vector<std::int64_t> out;
  const RingElement e = one();
  for (std::int64_t a = 0; a < rank(); ++a)
    if (multiply(simples_[a], simples_[a]) == e) out.push_back(a);
  return out;
}

std::int64_t VerlindeRing::fermion_index() const {
  if (lv_.n == 1) return lv_.ell >= 3 ? lv_.ell - 2 : -1;
  if (lv_.p == 2) return -1;
  return (lv_.p - 2) * lv_.power(lv_.n - 1);
}

// ---------------------------------------------------------------------------

FieldScalar qdim_simple(const ParamContext& ctx, std::int64_t a) {
  require(a >= 0 && a < ctx.levels.rank(), "qdim_simple: index out of range");
  const PlExpansion e = pl_expand(ctx.levels, a);
  const auto& F = *ctx.field;
  FieldScalar acc = F.from_int(e.digit(0) % 2 ? -1 : 1) * quantum_integer_field(ctx, e.digit(0) + 1);
  for (int i = 1; i < static_cast<int>(e.digits.size()); ++i) {
    const int ai = e.digits[i];
    const int sign = (ctx.sigma == -1 && ai % 2) ? -1 : 1;
    acc *= F.from_int(sign * (ai + 1));
  }
  return acc;
}

FieldScalar qdim_by_evaluation(const ParamContext& ctx, const VerlindeRing& ring, std::int64_t a) {
  require(ring.levels() == ctx.levels, "qdim_by_evaluation: ring and context disagree");
  const auto& F = *ctx.field;
  const FieldScalar x = -quantum_integer_field(ctx, 2);
  FieldScalar acc = F.zero();
  const auto& c = ring.simple_class(a).poly.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Integer r = *it % ctx.p;
    if (r < 0) r += ctx.p;
    acc = acc * x + F.from_int(r.convert_to<long long>());
  }
  return acc;
}

SymmetricCenter symmetric_center_descriptor(const ParamContext& ctx) {
  require(ctx.ell != ctx.p, "symmetric_center_descriptor: requires zeta != +-1");
  require(ctx.n >= 2, "symmetric_center_descriptor: requires n >= 2");
  SymmetricCenter out;
  out.level = ctx.n - 1;
  out.plus_only = ctx.N % 2 == 0;
  out.sigma_sqrt_exponent = static_cast<std::int64_t>(ctx.ell - 2) * ctx.ell;
  out.sigma_sqrt = zeta_half_power(ctx, out.sigma_sqrt_exponent);
  const std::int64_t size = sigma_levels(ctx.levels, out.level).top();
  out.label = std::string("Ver^{sigma^(1/2)") + (out.plus_only ? ",+" : "") + "}_" + std::to_string(size);
  return out;
}

std::vector<std::string> tensor_subcategories(const Levels& lv) {
  // The classification is stated for Ver_{p^(n+1)}; here ctx.n plays the role
  // of n+1, so the classical pieces run over 1 <= m <= ctx.n - 1.
  std::vector<std::string> out{"Ver^zeta", "Ver^zeta,+"};
  for (int m = 1; m <= lv.n - 1; ++m) {
    const std::string size = std::to_string(sigma_levels(lv, m).top());
    out.push_back("Ver^sigma_" + size);
    out.push_back("Ver^sigma,+_" + size);
  }
  if (lv.p == 2 && lv.n == 2) out.push_back("Ver^sigma,+_4");
  if ((lv.p > 2 || lv.n == 1) && lv.rank() >= 2) out.push_back("Vec^sigma(Z/2)");
  out.push_back("Vec");
  return out;
}

}  // namespace verlinde
