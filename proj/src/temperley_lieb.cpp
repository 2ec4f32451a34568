#include "verlinde/temperley_lieb.hpp"

#include "verlinde/error.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>

namespace verlinde::tl {

Diagram::Diagram(int bottom, int top, std::vector<int> partner)
    : m_(bottom), n_(top), partner_(std::move(partner)) {
  const int T = m_ + n_;
  require(m_ >= 0 && n_ >= 0 && T % 2 == 0, "Diagram: odd number of boundary points");
  require(static_cast<int>(partner_.size()) == T, "Diagram: wrong number of partners");
  for (int a = 0; a < T; ++a) {
    const int b = partner_[a];
    require(b >= 0 && b < T && b != a && partner_[b] == a, "Diagram: not a perfect matching");
  }
  for (int a = 0; a < T; ++a) {
    const int b = partner_[a];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c)
      require(partner_[c] > a && partner_[c] < b, "Diagram: matching is not planar");
  }
}

Diagram Diagram::from_pairs(int bottom, int top, const std::vector<std::pair<End, End>>& pairs) {
  std::vector<int> partner(bottom + top, -1);
  auto index = [&](End e) {
    require(e.pos >= 0 && e.pos < (e.top ? top : bottom), "Diagram::from_pairs: position out of range");
    return e.top ? bottom + (top - 1 - e.pos) : e.pos;
  };
  for (const auto& [x, y] : pairs) {
    const int a = index(x), b = index(y);
    partner[a] = b;
    partner[b] = a;
  }
  return Diagram(bottom, top, std::move(partner));
}

Diagram Diagram::identity(int k) {
  std::vector<std::pair<End, End>> p;
  for (int i = 0; i < k; ++i) p.push_back({End{false, i}, End{true, i}});
  return from_pairs(k, k, p);
}

Diagram Diagram::cup() { return Diagram(0, 2, {1, 0}); }
Diagram Diagram::cap() { return Diagram(2, 0, {1, 0}); }

End Diagram::end(int point) const {
  if (point < m_) return End{false, point};
  return End{true, n_ - 1 - (point - m_)};
}

std::vector<std::pair<End, End>> Diagram::pairs() const {
  std::vector<std::pair<End, End>> out;
  for (int a = 0; a < m_ + n_; ++a)
    if (partner_[a] > a) out.push_back({end(a), end(partner_[a])});
  return out;
}

std::string Diagram::ascii() const {
  std::ostringstream os;
  os << m_ << "->" << n_ << ":";
  for (const auto& [x, y] : pairs())
    os << " " << (x.top ? "t" : "b") << x.pos << "-" << (y.top ? "t" : "b") << y.pos;
  return os.str();
}

std::vector<Diagram> all_diagrams(int bottom, int top) {
  const int T = bottom + top;
  require(bottom >= 0 && top >= 0, "all_diagrams: negative boundary");
  if (T % 2) return {};
  std::vector<std::vector<int>> found;
  std::vector<int> partner(T, -1);
  // Fill the interval [lo, hi) given the remaining work list.
  std::function<void(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> todo) {
    while (!todo.empty() && todo.back().first >= todo.back().second) todo.pop_back();
    if (todo.empty()) {
      found.push_back(partner);
      return;
    }
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    for (int k = lo + 1; k < hi; k += 2) {
      partner[lo] = k;
      partner[k] = lo;
      auto next = todo;
      next.push_back({k + 1, hi});
      next.push_back({lo + 1, k});
      rec(std::move(next));
    }
  };
  rec({{0, T}});
  std::sort(found.begin(), found.end());
  std::vector<Diagram> out;
  out.reserve(found.size());
  for (auto& p : found) out.emplace_back(bottom, top, std::move(p));
  return out;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::pair<Diagram, int> compose_diagrams(const Diagram& g, const Diagram& f) {
  require(f.top() == g.bottom(), "compose: boundary mismatch");
  const int a = f.bottom(), b = f.top(), c = g.top();
  std::vector<char> seen(b, 0);
  std::vector<int> partner(a + c, -1);
  // Result boundary: f's bottom edge, then g's top edge.
  auto outer_index = [&](bool in_g, int point) { return in_g ? a + (point - b) : point; };

  // Walk from an outer point until another outer point is reached.
  auto walk = [&](bool in_g, int point) {
    const int start = outer_index(in_g, point);
    for (;;) {
      const Diagram& d = in_g ? g : f;
      const int y = d.partner(point);
      const End e = d.end(y);
      const bool outer = in_g ? e.top : !e.top;
      if (outer) {
        const int finish = outer_index(in_g, y);
        partner[start] = finish;
        partner[finish] = start;
        return;
      }
      seen[e.pos] = 1;
      in_g = !in_g;
      point = in_g ? g.point(End{false, e.pos}) : f.point(End{true, e.pos});
    }
  };
  for (int i = 0; i < a; ++i)
    if (partner[i] < 0) walk(false, i);
  for (int j = 0; j < c; ++j) {
    const int gp = g.point(End{true, j});
    if (partner[outer_index(true, gp)] < 0) walk(true, gp);
  }

  int loops = 0;
  for (int j = 0; j < b; ++j) {
    if (seen[j]) continue;
    ++loops;
    int pos = j;
    do {
      seen[pos] = 1;
      const int mid = f.end(f.partner(f.point(End{true, pos}))).pos;
      seen[mid] = 1;
      pos = g.end(g.partner(g.point(End{false, mid}))).pos;
    } while (pos != j);
  }
  return {Diagram(a, c, std::move(partner)), loops};
}

Diagram tensor_diagrams(const Diagram& f, const Diagram& g) {
  std::vector<std::pair<End, End>> pairs;
  auto shift = [&](End e) {
    return End{e.top, e.pos + (e.top ? f.top() : f.bottom())};
  };
  for (const auto& pr : f.pairs()) pairs.push_back(pr);
  for (const auto& [x, y] : g.pairs()) pairs.push_back({shift(x), shift(y)});
  return Diagram::from_pairs(f.bottom() + g.bottom(), f.top() + g.top(), pairs);
}

// ---------------------------------------------------------------------------

bool Morphism::operator==(const Morphism& o) const {
  return bottom == o.bottom && top == o.top && terms == o.terms;
}

std::string Morphism::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms) {
    os << (first ? "" : " + ") << c.to_string() << " * (" << d.ascii() << ")";
    first = false;
  }
  return os.str();
}

Category::Category(const ParamContext& ctx) : ctx_(ctx), delta_(-quantum_integer_field(ctx, 2)) {}

Morphism Category::zero(int bottom, int top) const { return Morphism{bottom, top, {}}; }

Morphism Category::diagram(const Diagram& d, const FieldScalar& c) const {
  Morphism m = zero(d.bottom(), d.top());
  if (!c.is_zero()) m.terms.emplace(d, c);
  return m;
}

Morphism Category::diagram(const Diagram& d) const { return diagram(d, scalar(1)); }
Morphism Category::identity(int k) const { return diagram(Diagram::identity(k)); }
Morphism Category::ev() const { return diagram(Diagram::cap()); }
Morphism Category::coev() const { return diagram(Diagram::cup()); }
Morphism Category::cup_cap() const { return compose(coev(), ev()); }

namespace {

void accumulate(Morphism& m, const Diagram& d, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.terms.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.terms.erase(it);
  }
}

}  // namespace

Morphism Category::add(const Morphism& a, const Morphism& b) const {
  require(a.bottom == b.bottom && a.top == b.top, "add: boundary mismatch");
  Morphism r = a;
  for (const auto& [d, c] : b.terms) accumulate(r, d, c);
  return r;
}

Morphism Category::sub(const Morphism& a, const Morphism& b) const { return add(a, scale(scalar(-1), b)); }

Morphism Category::scale(const FieldScalar& c, const Morphism& a) const {
  Morphism r = zero(a.bottom, a.top);
  for (const auto& [d, x] : a.terms) accumulate(r, d, c * x);
  return r;
}

Morphism Category::compose(const Morphism& g, const Morphism& f) const {
  require(f.top == g.bottom, "compose: boundary mismatch");
  Morphism r = zero(f.bottom, g.top);
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) {
      auto [d, loops] = compose_diagrams(dg, df);
      accumulate(r, d, cf * cg * delta_.pow(loops));
    }
  return r;
}

Morphism Category::compose(std::initializer_list<Morphism> chain) const {
  require(chain.size() > 0, "compose: empty chain");
  auto it = std::rbegin(chain);
  Morphism acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

Morphism Category::tensor(const Morphism& f, const Morphism& g) const {
  Morphism r = zero(f.bottom + g.bottom, f.top + g.top);
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) accumulate(r, tensor_diagrams(df, dg), cf * cg);
  return r;
}

Morphism Category::braiding(const FieldScalar& lambda, const FieldScalar& mu) const {
  return add(scale(lambda, identity(2)), scale(mu, cup_cap()));
}

Morphism Category::braiding() const { return braiding(ctx_.zeta_sqrt, ctx_.zeta_sqrt.inverse()); }

Morphism Category::braiding_inverse() const { return braiding(ctx_.zeta_sqrt.inverse(), ctx_.zeta_sqrt); }

Morphism Category::braiding_at(int i, int k) const {
  require(i >= 0 && i + 1 < k, "braiding_at: strand index out of range");
  return tensor(tensor(identity(i), braiding()), identity(k - i - 2));
}

Morphism Category::double_braiding(int k) const {
  require(k >= 1, "double_braiding: need at least one strand to wind around");
  Morphism acc = identity(k + 1);
  for (int i = 0; i < k; ++i) acc = compose(braiding_at(i, k + 1), acc);
  for (int i = k - 1; i >= 0; --i) acc = compose(braiding_at(i, k + 1), acc);
  return acc;
}

Morphism Category::partial_trace_left(const Morphism& h) const {
  require(h.bottom == h.top && h.bottom >= 1, "partial_trace_left: needs an endomorphism of X (x) Y");
  const int k = h.bottom - 1;
  return compose({tensor(ev(), identity(k)), tensor(identity(1), h), tensor(coev(), identity(k))});
}

Morphism Category::idempotent_I3() const {
  const Morphism a = compose(tensor(coev(), identity(1)), tensor(identity(1), ev()));
  const Morphism b = compose(tensor(identity(1), coev()), tensor(ev(), identity(1)));
  return sub(sub(identity(3), a), b);
}

Morphism Category::idempotent_I4() const { return tensor(idempotent_I3(), identity(1)); }

Morphism Category::nilpotent_E() const {
  const Morphism i4 = idempotent_I4();
  return compose({i4, tensor(identity(2), coev()), tensor(identity(2), ev()), i4});
}

Morphism Category::symmetric_center_lhs(bool plus) const {
  const Morphism idE = tensor(identity(1), nilpotent_E());
  const Morphism wound = compose(double_braiding(4), idE);
  return plus ? add(wound, idE) : sub(wound, idE);
}

bool Category::check_symmetric_center_identity() const { return symmetric_center_lhs(true).is_zero(); }

bool Category::check_symmetric_center_control() const { return symmetric_center_lhs(false).is_zero(); }

bool Category::check_braiding_constraints(const FieldScalar& lambda, const FieldScalar& mu) const {
  const Morphism beta = braiding(lambda, mu);
  const Morphism lhs = compose({tensor(ev(), identity(1)), tensor(identity(1), beta), tensor(beta, identity(1))});
  return lhs == tensor(identity(1), ev());
}

}  // namespace verlinde::tl
