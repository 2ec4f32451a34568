#include "selftest.hpp"

#include <verlinde/cartan.hpp>
#include <verlinde/chebyshev.hpp>
#include <verlinde/padic.hpp>
#include <verlinde/temperley_lieb.hpp>
#include <verlinde/tilting.hpp>
#include <verlinde/verlinde_ring.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace verlinde::cli {

namespace {

std::set<std::int64_t> sign_flip_values(const Levels& lv, std::int64_t v) {
  const PlExpansion e = pl_expand(lv, v);
  const int k = e.top_index();
  std::set<std::int64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> d = e.digits;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) d[i] = -d[i];
    const auto w = pl_value(lv, d);
    if (w >= 0) out.insert(w);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_selftest(const Levels& lv, const std::optional<ParamContext>& ctx) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.pass = body();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };
  const std::int64_t P = lv.top();

  check("padic.round_trip", [&] {
    for (std::int64_t v = 0; v <= 10 * P; ++v)
      if (pl_value(lv, pl_expand(lv, v)) != v) return false;
    return true;
  });
  check("padic.descendants_bounded", [&] {
    for (std::int64_t v = 0; v <= 2 * P; ++v) {
      const auto d = descendants(lv, v);
      if (!std::binary_search(d.begin(), d.end(), v) || d.front() < 0 || d.back() > v) return false;
    }
    return true;
  });
  check("padic.descendants_match_sign_flips", [&] {
    for (std::int64_t v = 0; v < std::min<std::int64_t>(P * lv.p, 3000); ++v) {
      const auto d = descendants(lv, v);
      if (std::set<std::int64_t>(d.begin(), d.end()) != sign_flip_values(lv, v)) return false;
    }
    return true;
  });

  check("chebyshev.character_identity", [&] {
    for (int k = 1; k <= 24; ++k)
      if (!cheb_character_identity_check(k)) return false;
    return true;
  });
  check("chebyshev.modulus_degree", [&] { return verlinde_modulus(lv).degree() == lv.rank(); });
  if (lv.n >= 2) {
    check("chebyshev.stable_dimension", [&] {
      const auto s = stable_modulus(lv);
      if (s.dimension != lv.power(lv.n - 1) - 1) return false;
      if (lv.ell == lv.p) return true;
      const auto dec = stable_decomposition(lv);
      return dec.rest_supported && dec.total() == s.dimension &&
             stable_decomposition_dimension(lv) == s.dimension;
    });
  }

  check("tilting.symmetric_characters", [&] {
    for (std::int64_t v = 0; v <= 40; ++v)
      if (!tilting_character(lv, v).is_symmetric()) return false;
    return true;
  });
  check("tilting.fusion_commutative", [&] {
    for (std::int64_t a = 0; a <= 12; a += 3)
      for (std::int64_t b = 0; b <= 12; b += 2)
        if (fuse(lv, a, b) != fuse(lv, b, a)) return false;
    return true;
  });

  const VerlindeRing ring(lv);
  const int D = ring.rank();
  check("ring.unitriangular_basis", [&] {
    const auto m = ring.basis_matrix();
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        if (i == j && m[i][j] != 1) return false;
        if (i > j && m[i][j] != 0) return false;
      }
    return true;
  });
  check("ring.phi_well_defined", [&] { return ring.phi_well_defined(); });
  check("ring.fusion_nonnegative", [&] {
    const int step = D > 30 ? D / 15 : 1;
    for (int a = 0; a < D; a += step)
      for (int b = a; b < D; b += step) ring.fuse_simples(a, b);  // throws on a negative coefficient
    return true;
  });
  check("ring.tilting_effective", [&] {
    for (std::int64_t m = 0; m <= P - 2; ++m)
      for (const auto& c : ring.express_in_simples(ring.tilting_class(m)))
        if (c < 0) return false;
    return true;
  });
  check("ring.cover_bijection", [&] {
    std::set<std::int64_t> seen;
    for (int a = 0; a < D; ++a) {
      const auto s = ring.projective_cover_index(a);
      if (s < projective_first(lv) || s > projective_last(lv)) return false;
      if (s != ring.projective_cover_index_closed_form(a)) return false;
      seen.insert(s);
    }
    return static_cast<int>(seen.size()) == D;
  });
  check("ring.fpdim_paths_agree", [&] {
    for (int a = 0; a < D; ++a)
      if (std::abs(ring.fpdim_simple(a) - ring.fpdim(ring.simple_class(a))) > 1e-9) return false;
    return true;
  });
  check("ring.fpdim_category_sum", [&] {
    double sum = 0;
    for (int a = 0; a < D; ++a)
      sum += ring.fpdim_simple(a) * ring.fpdim(ring.tilting_class(ring.projective_cover_index(a)));
    return std::abs(sum - ring.fpdim_category()) < 1e-6 * std::max(1.0, ring.fpdim_category());
  });
  check("ring.invertibles", [&] {
    std::vector<std::int64_t> expected{0};
    if (ring.fermion_index() > 0) expected.push_back(ring.fermion_index());
    return ring.list_invertibles() == expected;
  });

  check("cartan.blocks_match_oracle", [&] { return block_partition(lv) == connectivity_oracle(lv); });
  check("cartan.block_census", [&] { return block_census(block_partition(lv)) == expected_block_census(lv); });

  if (ctx) {
    check("scalars.zeta_order", [&] { return ctx->zeta.order() == static_cast<std::uint64_t>(ctx->N); });
    check("scalars.zeta_sqrt", [&] { return ctx->zeta_sqrt * ctx->zeta_sqrt == ctx->zeta; });
    check("scalars.quantum_multiplicative", [&] {
      for (int m = 1; m <= 12; ++m)
        for (int k = 1; k <= 12; ++k)
          if (quantum_integer_field(*ctx, m) * quantum_integer(ctx->zeta.pow(m), k) != quantum_integer_field(*ctx, m * k))
            return false;
      return true;
    });
    const tl::Category T(*ctx);
    check("tl.loop_value", [&] {
      return T.compose(T.ev(), T.coev()) == T.scale(T.delta(), T.identity(0));
    });
    check("tl.snake", [&] {
      const auto snake = T.compose(T.tensor(T.ev(), T.identity(1)), T.tensor(T.identity(1), T.coev()));
      return snake == T.identity(1);
    });
    check("tl.braiding_inverse", [&] {
      return T.compose(T.braiding(), T.braiding_inverse()) == T.identity(2);
    });
    check("tl.braiding_constraints", [&] {
      const auto& s = ctx->zeta_sqrt;
      return T.check_braiding_constraints(s, s.inverse());
    });
    if (ctx->ell == 2) {
      check("tl.symmetric_center_identity", [&] {
        return T.check_symmetric_center_identity() && !T.check_symmetric_center_control();
      });
    }
  }
  return out;
}

}  // namespace verlinde::cli
