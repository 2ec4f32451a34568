#pragma once

#include "verlinde/chebyshev.hpp"
#include "verlinde/scalars.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace verlinde {

// Residue class in Z[x]/(modulus); the polynomial is always reduced.
struct RingElement {
  IntPoly poly;
  bool operator==(const RingElement&) const = default;
};

// Grothendieck ring of Ver_{p^(n)}: Z[x] modulo Q_{p^(n)}/Q_{p^(n-1)}, where x
// is the class of T(1). Simple classes are built once at construction.
class VerlindeRing {
 public:
  explicit VerlindeRing(const Levels& lv);

  const Levels& levels() const { return lv_; }
  const IntPoly& modulus() const { return modulus_; }
  int rank() const { return static_cast<int>(simples_.size()); }
  // Ring of the classical context (p, p, n-1); null when n = 1.
  const VerlindeRing* sigma_ring() const { return sigma_.get(); }

  RingElement reduce(const IntPoly& f) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement one() const { return reduce(IntPoly::constant(1)); }

  // Class of T(m) for 0 <= m <= p^(n) - 2.
  RingElement tilting_class(std::int64_t m) const;
  // Class of the Frobenius image of T(1); zero for (p, n) = (2, 2).
  RingElement u_class() const;
  // Image of a class of the classical ring under y -> u.
  RingElement phi(const RingElement& classical) const;
  bool phi_well_defined() const;

  const RingElement& simple_class(std::int64_t a) const;
  // Column a holds the x-coefficients of simple_class(a).
  std::vector<std::vector<Integer>> basis_matrix() const;
  std::vector<Integer> express_in_simples(const RingElement& r) const;
  // Multiplicities of L(c) in L(a) (x) L(b).
  std::vector<Integer> fuse_simples(std::int64_t a, std::int64_t b) const;

  // s(a) with T(s(a)) the projective cover of L(a).
  std::int64_t projective_cover_index(std::int64_t a) const;
  // Digit closed form of the same index, used as a cross-check.
  std::int64_t projective_cover_index_closed_form(std::int64_t a) const;

  // Value at x = 2 cos(pi / p^(n)), computed in the Q_k basis.
  double fpdim(const RingElement& r) const;
  double fpdim_simple(std::int64_t a) const;  // digit product
  double fpdim_category() const;

  std::vector<std::int64_t> list_invertibles() const;
  // Index of the nontrivial invertible simple, if any.
  std::int64_t fermion_index() const;

  // Coefficients c with r = sum c_k Q_{k+1}.
  std::vector<Integer> chebyshev_coordinates(const RingElement& r) const;

 private:
  void check_simple(std::int64_t a) const;
  Levels lv_;
  IntPoly modulus_;
  std::vector<RingElement> q_;  // q_[k] = Q_k mod modulus, k = 0..p^(n)
  std::vector<RingElement> simples_;
  std::unique_ptr<VerlindeRing> sigma_;
  RingElement u_;
};

// (-1)^{a_0} [a_0+1]_zeta prod_{i>=1} sigma^{a_i} (a_i+1), digit by digit.
FieldScalar qdim_simple(const ParamContext& ctx, std::int64_t a);
// The ring class of L(a) evaluated at x = dim T(1) = -[2]_zeta.
FieldScalar qdim_by_evaluation(const ParamContext& ctx, const VerlindeRing& ring, std::int64_t a);

struct SymmetricCenter {
  int level = 0;         // n - 1
  bool plus_only = false;  // N even
  std::int64_t sigma_sqrt_exponent = 0;  // as a power of zeta^{1/2}
  FieldScalar sigma_sqrt;
  std::string label;
};
// Requires zeta != +-1 and n >= 2.
SymmetricCenter symmetric_center_descriptor(const ParamContext& ctx);

std::vector<std::string> tensor_subcategories(const Levels& lv);

}  // namespace verlinde
