#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "ctm/partition.hpp"
#include "ctm/rational.hpp"
#include "ctm/staircase.hpp"

namespace ctm {

namespace detail {
inline int abs_diff(int a, int b) { return a > b ? a - b : b - a; }

inline void check_updown_args(int r, const std::optional<int>& height_bound) {
  if (r < 0) throw std::domain_error("walk length must be >= 0");
  if (height_bound && *height_bound < 1) throw std::domain_error("height bound must be >= 1");
}
}  // namespace detail

// Endpoint distribution of length-r up-down walks on partitions starting from the
// empty shape (each step adds or removes one box). With height_bound set, every shape
// along the walk is restricted to at most that many rows.
inline std::map<Partition, BigInt> updown_distribution(int r,
                                                       std::optional<int> height_bound = {}) {
  detail::check_updown_args(r, height_bound);
  std::map<Partition, BigInt> layer;
  layer[Partition()] = 1;
  for (int t = 0; t < r; ++t) {
    std::map<Partition, BigInt> next;
    for (const auto& [shape, count] : layer)
      for (auto& nb : partition_neighbors(shape, height_bound)) next[nb] += count;
    layer = std::move(next);
  }
  return layer;
}

// Number of length-r up-down walks from the empty shape to `shape`. Zero whenever
// |shape| > r or |shape| and r have different parities. Layers are pruned to shapes
// that can still reach the target in the remaining steps.
inline BigInt count_updown(const Partition& shape, int r, std::optional<int> height_bound = {}) {
  detail::check_updown_args(r, height_bound);
  if (height_bound && shape.length() > *height_bound)
    throw std::domain_error("target shape is taller than the height bound");
  const int target_size = shape.size();
  std::map<Partition, BigInt> layer;
  layer[Partition()] = 1;
  for (int t = 0; t < r; ++t) {
    const int remaining = r - t - 1;
    std::map<Partition, BigInt> next;
    for (const auto& [cur, count] : layer)
      for (auto& nb : partition_neighbors(cur, height_bound)) {
        if (detail::abs_diff(nb.size(), target_size) > remaining) continue;
        next[nb] += count;
      }
    layer = std::move(next);
  }
  auto it = layer.find(shape);
  return it == layer.end() ? BigInt(0) : it->second;
}

// Endpoint distribution of staircase walks from the zero staircase of the given
// height, stepping +1/-1 on single entries in the order prescribed by `type`.
inline std::map<Staircase, BigInt> staircase_distribution(int height, const TypeVector& type) {
  std::map<Staircase, BigInt> layer;
  layer[Staircase::zeros(height)] = 1;
  for (int step : type.steps()) {
    std::map<Staircase, BigInt> next;
    for (const auto& [shape, count] : layer) {
      auto moves = step > 0 ? staircase_up_moves(shape) : staircase_down_moves(shape);
      for (auto& nb : moves) next[nb] += count;
    }
    layer = std::move(next);
  }
  return layer;
}

// Number of staircase walks of the given type from zero to `shape`. Layers are pruned
// to staircases whose entry-wise distance to the target fits in the remaining up and
// down step budgets.
inline BigInt count_staircase(const Staircase& shape, const TypeVector& type) {
  const auto& target = shape.entries();
  const int h = shape.height();
  const auto& steps = type.steps();
  // Suffix step budgets: ups[t] = number of +1 steps at positions >= t.
  const int len = type.length();
  std::vector<int> ups(len + 1, 0), downs(len + 1, 0);
  for (int t = len - 1; t >= 0; --t) {
    ups[t] = ups[t + 1] + (steps[t] > 0 ? 1 : 0);
    downs[t] = downs[t + 1] + (steps[t] < 0 ? 1 : 0);
  }

  auto reachable = [&](const Staircase& cur, int t) {
    int need_up = 0, need_down = 0;
    const auto& e = cur.entries();
    for (int i = 0; i < h; ++i) {
      if (e[i] < target[i]) need_up += target[i] - e[i];
      if (e[i] > target[i]) need_down += e[i] - target[i];
    }
    return need_up <= ups[t] && need_down <= downs[t];
  };

  std::map<Staircase, BigInt> layer;
  Staircase start = Staircase::zeros(h);
  if (!reachable(start, 0)) return 0;
  layer[start] = 1;
  for (int t = 0; t < len; ++t) {
    std::map<Staircase, BigInt> next;
    for (const auto& [cur, count] : layer) {
      auto moves = steps[t] > 0 ? staircase_up_moves(cur) : staircase_down_moves(cur);
      for (auto& nb : moves) {
        if (!reachable(nb, t + 1)) continue;
        next[nb] += count;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(shape);
  return it == layer.end() ? BigInt(0) : it->second;
}

}  // namespace ctm
