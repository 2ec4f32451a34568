#pragma once

#include "verlinde/scalars.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace verlinde::tl {

// Where a boundary point sits: on the bottom or top edge, counted left to
// right.
struct End {
  bool top = false;
  int pos = 0;
  bool operator==(const End&) const = default;
};

// Planar perfect matching between m bottom and n top points. Points are
// numbered along the boundary: bottom left to right, then top right to left,
// so planarity is the usual non-crossing condition on a circle.
class Diagram {
 public:
  Diagram(int bottom, int top, std::vector<int> partner);
  static Diagram from_pairs(int bottom, int top, const std::vector<std::pair<End, End>>& pairs);
  static Diagram identity(int k);
  static Diagram cup();  // 0 -> 2
  static Diagram cap();  // 2 -> 0

  int bottom() const { return m_; }
  int top() const { return n_; }
  int point(End e) const { return e.top ? m_ + (n_ - 1 - e.pos) : e.pos; }
  End end(int point) const;
  int partner(int point) const { return partner_[point]; }
  const std::vector<int>& partners() const { return partner_; }

  // Pairs as (end, end) with the first end smaller in boundary order.
  std::vector<std::pair<End, End>> pairs() const;
  std::string ascii() const;

  auto operator<=>(const Diagram&) const = default;

 private:
  int m_;
  int n_;
  std::vector<int> partner_;
};

// All planar matchings with the given boundary, in lexicographic order.
std::vector<Diagram> all_diagrams(int bottom, int top);
// Catalan number C_k.
std::uint64_t catalan(int k);

struct Morphism {
  int bottom = 0;
  int top = 0;
  std::map<Diagram, FieldScalar> terms;  // zero coefficients never stored

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Morphism& o) const;
  std::string to_string() const;
};

class Category {
 public:
  explicit Category(const ParamContext& ctx);

  const ParamContext& context() const { return ctx_; }
  const FieldScalar& delta() const { return delta_; }  // -[2]_zeta
  FieldScalar scalar(long long v) const { return ctx_.field->from_int(v); }

  Morphism zero(int bottom, int top) const;
  Morphism diagram(const Diagram& d, const FieldScalar& c) const;
  Morphism diagram(const Diagram& d) const;
  Morphism identity(int k) const;
  Morphism ev() const;    // cap, X (x) X -> 1
  Morphism coev() const;  // cup, 1 -> X (x) X
  Morphism cup_cap() const;  // U = coev o ev

  Morphism add(const Morphism& a, const Morphism& b) const;
  Morphism sub(const Morphism& a, const Morphism& b) const;
  Morphism scale(const FieldScalar& c, const Morphism& a) const;
  // g o f; each closed loop contributes delta.
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism compose(std::initializer_list<Morphism> chain) const;  // leftmost applied last
  Morphism tensor(const Morphism& f, const Morphism& g) const;

  // lambda Id + mu U on two strands.
  Morphism braiding(const FieldScalar& lambda, const FieldScalar& mu) const;
  Morphism braiding() const;          // zeta^{1/2} Id + zeta^{-1/2} U
  Morphism braiding_inverse() const;  // roots swapped
  // The braiding generator on strands i, i+1 (0-based) of k strands.
  Morphism braiding_at(int i, int k) const;
  // beta_{X^k, X} o beta_{X, X^k} on 1 + k strands.
  Morphism double_braiding(int k) const;
  // (ev (x) Id) o (Id (x) h) o (coev (x) Id) for h on 1 + k strands.
  Morphism partial_trace_left(const Morphism& h) const;

  Morphism idempotent_I3() const;
  Morphism idempotent_I4() const;
  Morphism nilpotent_E() const;

  // beta^2_{X, X^4} o (Id (x) E) + (Id (x) E) == 0.
  bool check_symmetric_center_identity() const;
  // Same expression with the sign of the second term flipped.
  bool check_symmetric_center_control() const;
  // (ev (x) Id) o (Id (x) beta) o (beta (x) Id) == Id (x) ev for
  // beta = lambda Id + mu U.
  bool check_braiding_constraints(const FieldScalar& lambda, const FieldScalar& mu) const;

 private:
  Morphism symmetric_center_lhs(bool plus) const;
  ParamContext ctx_;
  FieldScalar delta_;
};

// Composite of two diagrams: the resulting diagram and the number of loops.
std::pair<Diagram, int> compose_diagrams(const Diagram& g, const Diagram& f);
Diagram tensor_diagrams(const Diagram& f, const Diagram& g);

}  // namespace verlinde::tl
