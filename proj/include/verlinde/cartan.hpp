#pragma once

#include "verlinde/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace verlinde {

// dim Hom(T(i), T(j)) for 0 <= i, j <= p^(n) - 2.
std::int64_t hom_dim(const Levels& lv, std::int64_t i, std::int64_t j);

// Projective range [p^(n-1) - 1, p^(n) - 2].
std::int64_t projective_first(const Levels& lv);
std::int64_t projective_last(const Levels& lv);

struct CartanMatrix {
  std::int64_t first = 0;  // index of row/column 0
  std::vector<std::vector<std::int64_t>> entries;
  std::int64_t at(std::int64_t i, std::int64_t j) const { return entries[i - first][j - first]; }
};
CartanMatrix cartan_matrix(const Levels& lv);

using Block = std::vector<std::int64_t>;

// Closed-form criterion on two indices of the projective range.
bool same_block(const Levels& lv, std::int64_t i, std::int64_t j);
// Blocks from the closed form, each sorted, ordered by smallest member.
std::vector<Block> block_partition(const Levels& lv);
// Connected components of the graph with an edge wherever the Cartan entry
// is nonzero.
std::vector<Block> connectivity_oracle(const Levels& lv);

// size -> number of blocks of that size
std::map<std::int64_t, std::int64_t> block_census(const std::vector<Block>& blocks);
std::map<std::int64_t, std::int64_t> expected_block_census(const Levels& lv);

// The block B(a_0) of the projective range for odd a_0, and the map onto
// B(1) of the classical context (p, p, n). Requires n >= 2.
Block principal_block(const Levels& lv, int a0);
struct BlockBijection {
  Levels target;
  std::map<std::int64_t, std::int64_t> map;
};
BlockBijection principal_block_bijection(const Levels& lv, int a0);

std::string cartan_to_csv(const CartanMatrix& c);
std::string blocks_to_csv(const std::vector<Block>& blocks);

}  // namespace verlinde
