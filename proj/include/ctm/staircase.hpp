#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctm {

// Weakly decreasing integer vector of fixed height; entries may be negative. All
// `height` entries are stored, including zeros, so (1,0,0) and (1,0) are distinct
// values living at different heights.
class Staircase {
 public:
  explicit Staircase(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("staircase height must be >= 1");
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i - 1] < entries_[i])
        throw std::invalid_argument("staircase entries must be weakly decreasing");
  }

  static Staircase zeros(int height) {
    if (height < 1) throw std::invalid_argument("staircase height must be >= 1");
    return Staircase(std::vector<int>(height, 0));
  }

  int height() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  auto operator<=>(const Staircase&) const = default;

 private:
  std::vector<int> entries_;
};

// Step pattern of a staircase walk: a fixed-length word over {+1, -1}.
class TypeVector {
 public:
  TypeVector() = default;

  explicit TypeVector(std::vector<int> steps) : steps_(std::move(steps)) {
    for (int s : steps_)
      if (s != 1 && s != -1) throw std::invalid_argument("type vector steps must be +1 or -1");
  }

  // (+1)^plus (-1)^minus, the canonical evaluation order.
  static TypeVector canonical(int plus, int minus) {
    if (plus < 0 || minus < 0) throw std::invalid_argument("step counts must be >= 0");
    std::vector<int> steps(plus, 1);
    steps.insert(steps.end(), minus, -1);
    return TypeVector(std::move(steps));
  }

  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<int>& steps() const { return steps_; }
  int plus_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), 1));
  }
  int minus_count() const { return length() - plus_count(); }

 private:
  std::vector<int> steps_;
};

namespace detail {
// Raising (delta = +1) or lowering (delta = -1) moves: bump one entry, keeping the
// result weakly decreasing. Ascending lexicographic order.
inline std::vector<Staircase> staircase_moves(const Staircase& shape, int delta) {
  std::vector<Staircase> out;
  const auto& e = shape.entries();
  int h = shape.height();
  for (int i = 0; i < h; ++i) {
    if (delta > 0 && i > 0 && e[i] + 1 > e[i - 1]) continue;
    if (delta < 0 && i + 1 < h && e[i] - 1 < e[i + 1]) continue;
    std::vector<int> next(e);
    next[i] += delta;
    out.emplace_back(std::move(next));
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

inline std::vector<Staircase> staircase_up_moves(const Staircase& shape) {
  return detail::staircase_moves(shape, 1);
}

inline std::vector<Staircase> staircase_down_moves(const Staircase& shape) {
  return detail::staircase_moves(shape, -1);
}

// All staircases one move away in either direction, ascending lexicographic order.
inline std::vector<Staircase> staircase_neighbors(const Staircase& shape) {
  auto out = staircase_up_moves(shape);
  auto down = staircase_down_moves(shape);
  out.insert(out.end(), down.begin(), down.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctm
