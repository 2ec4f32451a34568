#include "verlinde/cartan.hpp"

#include "verlinde/error.hpp"
#include "verlinde/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace verlinde {

namespace {

void check_tilting(const Levels& lv, std::int64_t i) {
  require(i >= 0 && i <= lv.top() - 2, "index outside 0..p^(n)-2");
}

void check_projective(const Levels& lv, std::int64_t i) {
  require(i >= projective_first(lv) && i <= projective_last(lv), "index outside the projective range");
}

std::int64_t intersection_size(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<Block> components(const Levels& lv, UnionFind& uf) {
  const std::int64_t first = projective_first(lv);
  std::map<std::size_t, Block> groups;
  for (std::size_t k = 0; k < uf.parent.size(); ++k) groups[uf.find(k)].push_back(first + static_cast<std::int64_t>(k));
  std::vector<Block> out;
  for (auto& [root, b] : groups) out.push_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t hom_dim(const Levels& lv, std::int64_t i, std::int64_t j) {
  check_tilting(lv, i);
  check_tilting(lv, j);
  return intersection_size(descendants(lv, i + 1), descendants(lv, j + 1));
}

std::int64_t projective_first(const Levels& lv) { return lv.power(lv.n - 1) - 1; }
std::int64_t projective_last(const Levels& lv) { return lv.top() - 2; }

CartanMatrix cartan_matrix(const Levels& lv) {
  const std::int64_t first = projective_first(lv);
  const std::int64_t D = projective_last(lv) - first + 1;
  std::vector<std::vector<std::int64_t>> desc;
  desc.reserve(D);
  for (std::int64_t k = 0; k < D; ++k) desc.push_back(descendants(lv, first + k + 1));
  CartanMatrix c;
  c.first = first;
  c.entries.assign(D, std::vector<std::int64_t>(D, 0));
  for (std::int64_t a = 0; a < D; ++a)
    for (std::int64_t b = a; b < D; ++b) c.entries[a][b] = c.entries[b][a] = intersection_size(desc[a], desc[b]);
  return c;
}

bool same_block(const Levels& lv, std::int64_t i, std::int64_t j) {
  check_projective(lv, i);
  check_projective(lv, j);
  const PlExpansion ei = pl_expand(lv, i + 1);
  const PlExpansion ej = pl_expand(lv, j + 1);
  auto trailing = [](const PlExpansion& e) {
    int k = 0;
    while (e.digit(k) == 0) ++k;
    return k;
  };
  const int k = trailing(ei);
  if (trailing(ej) != k) return false;
  // Every index in the range has top digit n-1; a top digit cannot be reflected.
  if (k >= lv.n - 1) return i == j;
  // i+1 = +-(j+1) modulo 2 p^(k+1). Modulo 2 p^(k) is not enough once the
  // radix at k is even and at least 4: (3,4,2) would merge {4,10} with {6,8}.
  const std::int64_t modulus = 2 * lv.power(k + 1);
  const std::int64_t vi = i + 1, vj = j + 1;
  return (vi - vj) % modulus == 0 || (vi + vj) % modulus == 0;
}

std::vector<Block> block_partition(const Levels& lv) {
  const std::int64_t first = projective_first(lv);
  const std::int64_t D = projective_last(lv) - first + 1;
  UnionFind uf(static_cast<std::size_t>(D));
  for (std::int64_t a = 0; a < D; ++a)
    for (std::int64_t b = a + 1; b < D; ++b)
      if (same_block(lv, first + a, first + b)) uf.unite(a, b);
  return components(lv, uf);
}

std::vector<Block> connectivity_oracle(const Levels& lv) {
  const CartanMatrix c = cartan_matrix(lv);
  const std::size_t D = c.entries.size();
  UnionFind uf(D);
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = a + 1; b < D; ++b)
      if (c.entries[a][b] > 0) uf.unite(a, b);
  return components(lv, uf);
}

std::map<std::int64_t, std::int64_t> block_census(const std::vector<Block>& blocks) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& b : blocks) ++out[static_cast<std::int64_t>(b.size())];
  return out;
}

std::map<std::int64_t, std::int64_t> expected_block_census(const Levels& lv) {
  std::map<std::int64_t, std::int64_t> out;
  if (lv.n == 1) {
    out[1] = lv.ell - 1;
    return out;
  }
  const std::int64_t p = lv.p;
  out[1] += p - 1;
  std::int64_t size = p - 1;  // p^j (p-1)
  for (int j = 0; j <= lv.n - 3; ++j, size *= p) out[size] += p - 1;
  out[size] += lv.ell - 1;
  return out;
}

Block principal_block(const Levels& lv, int a0) {
  require(lv.n >= 2, "principal_block: requires n >= 2");
  require(a0 >= 1 && a0 <= lv.ell - 1 && a0 % 2 == 1, "principal_block: a_0 must be odd in 1..l-1");
  Block out;
  const std::int64_t twice = 2 * static_cast<std::int64_t>(lv.ell);
  for (std::int64_t i = projective_first(lv); i <= projective_last(lv); ++i) {
    const std::int64_t v = i + 1;
    if ((v - a0) % twice == 0 || (v + a0) % twice == 0) out.push_back(i);
  }
  return out;
}

BlockBijection principal_block_bijection(const Levels& lv, int a0) {
  BlockBijection out{sigma_levels(lv, lv.n), {}};
  const std::int64_t ell = lv.ell;
  for (std::int64_t i : principal_block(lv, a0)) {
    // Write i+1 = l C + eps a_0 with C even; the image has i'+1 = p C + eps.
    const std::int64_t v = i + 1;
    const bool plus = (v - a0) % (2 * ell) == 0;
    const std::int64_t C = plus ? (v - a0) / ell : (v + a0) / ell;
    out.map.emplace(i, lv.p * C + (plus ? 1 : -1) - 1);
  }
  return out;
}

std::string cartan_to_csv(const CartanMatrix& c) {
  std::ostringstream os;
  const std::size_t D = c.entries.size();
  for (std::size_t j = 0; j < D; ++j) os << "," << c.first + static_cast<std::int64_t>(j);
  os << "\n";
  for (std::size_t i = 0; i < D; ++i) {
    os << c.first + static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < D; ++j) os << "," << c.entries[i][j];
    os << "\n";
  }
  return os.str();
}

std::string blocks_to_csv(const std::vector<Block>& blocks) {
  std::ostringstream os;
  os << "block,size,members\n";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << b << "," << blocks[b].size() << ",";
    for (std::size_t k = 0; k < blocks[b].size(); ++k) os << (k ? " " : "") << blocks[b][k];
    os << "\n";
  }
  return os.str();
}

}  // namespace verlinde
