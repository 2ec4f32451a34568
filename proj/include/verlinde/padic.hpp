#pragma once

#include "verlinde/scalars.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace verlinde {

// Mixed-radix digits of v = a_0 + sum_{i>=1} a_i p^(i), least significant
// first, with 0 <= a_0 < l and 0 <= a_i < p. Zero expands to {0}.
struct PlExpansion {
  std::vector<int> digits;

  int top_index() const { return static_cast<int>(digits.size()) - 1; }
  int digit(int i) const { return i >= 0 && i < static_cast<int>(digits.size()) ? digits[i] : 0; }
  bool operator==(const PlExpansion&) const = default;
};

using IndexSet = std::set<int>;

PlExpansion pl_expand(const Levels& lv, std::int64_t v);
// Accepts signed or oversized digits, least significant first.
std::int64_t pl_value(const Levels& lv, const std::vector<int>& digits);
std::int64_t pl_value(const Levels& lv, const PlExpansion& e);

// S must lie in {0..k-1} where k is the top index.
bool is_down_admissible(const Levels& lv, const PlExpansion& e, const IndexSet& S);
std::int64_t reflect_down(const Levels& lv, const PlExpansion& e, const IndexSet& S);

// S must lie in {0..k}.
bool is_up_admissible(const Levels& lv, const PlExpansion& e, const IndexSet& S);
std::int64_t reflect_up(const Levels& lv, const PlExpansion& e, const IndexSet& S);

enum class Direction { down, up };

// Finest partition of S into admissible runs of consecutive indices. Throws
// if S itself is not admissible.
std::vector<IndexSet> minimal_stretches(const Levels& lv, const PlExpansion& e, const IndexSet& S,
                                        Direction dir);

// Smallest down-admissible superset of S, if one exists.
std::optional<IndexSet> down_hull(const Levels& lv, const PlExpansion& e, const IndexSet& S);

// Values reflect_down(v, S) over all down-admissible S, ascending. v >= 0.
std::vector<std::int64_t> descendants(const Levels& lv, std::int64_t v);

}  // namespace verlinde
