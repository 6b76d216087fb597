#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ctm/partition.hpp"
#include "ctm/rational.hpp"
#include "ctm/staircase.hpp"

namespace ctm {

// Exhaustive walk enumeration, kept deliberately independent of the DP in updown.hpp:
// moves are generated inline with local checks instead of reusing the shared neighbor
// helpers, so the two paths can cross-validate each other. Guarded against anything
// but small instances.

namespace detail {

inline void brute_updown_rec(std::vector<int>& cur, int depth, int r,
                             const std::vector<int>& target, std::optional<int> bound,
                             BigInt& hits) {
  if (depth == r) {
    if (cur == target) ++hits;
    return;
  }
  int len = static_cast<int>(cur.size());
  // Add a box to row i (0-based); legal when the row stays <= the one above.
  for (int i = 0; i <= len; ++i) {
    if (i == len) {
      if (bound && len + 1 > *bound) continue;
      cur.push_back(1);
      brute_updown_rec(cur, depth + 1, r, target, bound, hits);
      cur.pop_back();
    } else {
      if (i > 0 && cur[i] + 1 > cur[i - 1]) continue;
      ++cur[i];
      brute_updown_rec(cur, depth + 1, r, target, bound, hits);
      --cur[i];
    }
  }
  // Remove a box from row i; legal when the row stays >= the one below. A row can
  // only empty out when it is the last one (rows below are always >= 1).
  for (int i = 0; i < len; ++i) {
    if (i + 1 < len && cur[i] - 1 < cur[i + 1]) continue;
    --cur[i];
    bool popped = false;
    if (cur[i] == 0) {
      cur.pop_back();
      popped = true;
    }
    brute_updown_rec(cur, depth + 1, r, target, bound, hits);
    if (popped) cur.push_back(0);
    ++cur[i];
  }
}

inline void brute_staircase_rec(std::vector<int>& cur, int depth,
                                const std::vector<int>& steps,
                                const std::vector<int>& target, BigInt& hits) {
  if (depth == static_cast<int>(steps.size())) {
    if (cur == target) ++hits;
    return;
  }
  int h = static_cast<int>(cur.size());
  int delta = steps[depth];
  for (int i = 0; i < h; ++i) {
    if (delta > 0 && i > 0 && cur[i] + 1 > cur[i - 1]) continue;
    if (delta < 0 && i + 1 < h && cur[i] - 1 < cur[i + 1]) continue;
    cur[i] += delta;
    brute_staircase_rec(cur, depth + 1, steps, target, hits);
    cur[i] -= delta;
  }
}

}  // namespace detail

inline BigInt brute_force_updown(const Partition& shape, int r,
                                 std::optional<int> height_bound = {}) {
  if (r < 0) throw std::domain_error("walk length must be >= 0");
  if (r > 10) throw std::domain_error("brute_force_updown refuses r > 10");
  if (height_bound && *height_bound < 1) throw std::domain_error("height bound must be >= 1");
  if (height_bound && shape.length() > *height_bound)
    throw std::domain_error("target shape is taller than the height bound");
  std::vector<int> cur;
  BigInt hits = 0;
  detail::brute_updown_rec(cur, 0, r, shape.parts(), height_bound, hits);
  return hits;
}

inline BigInt brute_force_staircase(const Staircase& shape, const TypeVector& type) {
  if (type.length() > 10) throw std::domain_error("brute_force_staircase refuses length > 10");
  std::vector<int> cur(shape.height(), 0);
  BigInt hits = 0;
  detail::brute_staircase_rec(cur, 0, type.steps(), shape.entries(), hits);
  return hits;
}

}  // namespace ctm
