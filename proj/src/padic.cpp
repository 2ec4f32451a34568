#include "verlinde/padic.hpp"

#include "verlinde/error.hpp"

#include <algorithm>

namespace verlinde {

PlExpansion pl_expand(const Levels& lv, std::int64_t v) {
  require(v >= 0, "pl_expand: negative value");
  PlExpansion e;
  e.digits.push_back(static_cast<int>(v % lv.ell));
  v /= lv.ell;
  while (v > 0) {
    e.digits.push_back(static_cast<int>(v % lv.p));
    v /= lv.p;
  }
  return e;
}

std::int64_t pl_value(const Levels& lv, const std::vector<int>& digits) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) v += digits[i] * lv.power(static_cast<int>(i));
  return v;
}

std::int64_t pl_value(const Levels& lv, const PlExpansion& e) { return pl_value(lv, e.digits); }

namespace {

void check_range(const IndexSet& S, int lo, int hi, const char* what) {
  for (int s : S) require(s >= lo && s <= hi, what);
}

}  // namespace

bool is_down_admissible(const Levels&, const PlExpansion& e, const IndexSet& S) {
  check_range(S, 0, e.top_index() - 1, "is_down_admissible: index outside 0..k-1");
  for (int s : S) {
    if (!S.contains(s - 1) && e.digit(s) == 0) return false;
    if (e.digit(s + 1) == 0 && !S.contains(s + 1)) return false;
  }
  return true;
}

std::int64_t reflect_down(const Levels& lv, const PlExpansion& e, const IndexSet& S) {
  check_range(S, 0, e.top_index() - 1, "reflect_down: index outside 0..k-1");
  std::vector<int> d = e.digits;
  for (int s : S) d[s] = -d[s];
  return pl_value(lv, d);
}

bool is_up_admissible(const Levels& lv, const PlExpansion& e, const IndexSet& S) {
  check_range(S, 0, e.top_index(), "is_up_admissible: index outside 0..k");
  for (int s : S) {
    if (!S.contains(s - 1) && e.digit(s) == 0) return false;
    if (e.digit(s + 1) == lv.p - 1 && !S.contains(s + 1)) return false;
  }
  return true;
}

std::int64_t reflect_up(const Levels& lv, const PlExpansion& e, const IndexSet& S) {
  check_range(S, 0, e.top_index(), "reflect_up: index outside 0..k");
  std::vector<int> d(e.digits.size() + 1, 0);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    if (S.contains(i)) d[i] = -e.digit(i);
    else if (S.contains(i - 1)) d[i] = e.digit(i) + 2;
    else d[i] = e.digit(i);
  }
  return pl_value(lv, d);
}

std::vector<IndexSet> minimal_stretches(const Levels& lv, const PlExpansion& e, const IndexSet& S,
                                        Direction dir) {
  const bool ok = dir == Direction::down ? is_down_admissible(lv, e, S) : is_up_admissible(lv, e, S);
  require(ok, "minimal_stretches: set is not admissible");
  // Cuts are local: a run may be split before index y+1 exactly when y+1
  // could start a stretch and y could end one.
  auto cuttable = [&](int next) {
    const int a = e.digit(next);
    return dir == Direction::down ? a != 0 : (a != 0 && a != lv.p - 1);
  };
  std::vector<IndexSet> out;
  for (int s : S) {
    if (out.empty() || !out.back().contains(s - 1) || cuttable(s)) out.emplace_back();
    out.back().insert(s);
  }
  return out;
}

std::optional<IndexSet> down_hull(const Levels&, const PlExpansion& e, const IndexSet& S) {
  const int k = e.top_index();
  check_range(S, 0, k, "down_hull: index outside 0..k");
  if (S.contains(k)) return std::nullopt;
  IndexSet H = S;
  // Both repairs are forced: a stretch cannot end below a zero digit, and a
  // stretch cannot start at one. The fixpoint is therefore the minimum.
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : IndexSet(H)) {
      if (e.digit(s + 1) == 0 && !H.contains(s + 1)) {
        H.insert(s + 1);
        changed = true;
      }
      if (!H.contains(s - 1) && e.digit(s) == 0) {
        if (s == 0) return std::nullopt;
        H.insert(s - 1);
        changed = true;
      }
    }
  }
  if (H.contains(k)) return std::nullopt;
  return H;
}

std::vector<std::int64_t> descendants(const Levels& lv, std::int64_t v) {
  const PlExpansion e = pl_expand(lv, v);
  const int k = e.top_index();
  require(k < 62, "descendants: too many digits");
  std::set<std::int64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    IndexSet S;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) S.insert(i);
    if (is_down_admissible(lv, e, S)) out.insert(reflect_down(lv, e, S));
  }
  return {out.begin(), out.end()};
}

}  // namespace verlinde
