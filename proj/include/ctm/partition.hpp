#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctm {

// Integer partition: weakly decreasing positive parts, trailing zeros never stored.
// The empty partition is a valid value (the default).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // 1-based row; rows past the last part read as 0.
  int part(int row) const {
    if (row < 1) throw std::domain_error("partition row index must be >= 1");
    return row <= length() ? parts_[row - 1] : 0;
  }

  bool contains_box(int row, int col) const {
    return row >= 1 && col >= 1 && row <= length() && col <= parts_[row - 1];
  }

  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.resize(parts_[0], 0);
      for (int p : parts_)
        for (int c = 0; c < p; ++c) ++cols[c];
    }
    return Partition(std::move(cols));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Hook length of the 1-based box (row, col): arm + leg + 1.
inline int hook_length(const Partition& shape, int row, int col) {
  if (!shape.contains_box(row, col))
    throw std::domain_error("hook_length: box (" + std::to_string(row) + "," +
                            std::to_string(col) + ") is outside the shape");
  int arm = shape.part(row) - col;
  int leg = shape.conjugate().part(col) - row;
  return arm + leg + 1;
}

// All partitions differing from `shape` by adding or removing a single box, with the
// result's length capped by `max_length` when given. Ascending lexicographic order.
inline std::vector<Partition> partition_neighbors(const Partition& shape,
                                                  std::optional<int> max_length = {}) {
  if (max_length && *max_length < 0) throw std::domain_error("max_length must be >= 0");
  std::vector<Partition> out;
  const auto& parts = shape.parts();
  int len = shape.length();
  // Additions: row i (1-based, up to len+1) is addable when the result stays weakly
  // decreasing, i.e. part(i) < part(i-1) or i == 1.
  for (int i = 1; i <= len + 1; ++i) {
    if (i > 1 && shape.part(i) >= shape.part(i - 1)) continue;
    std::vector<int> next(parts);
    if (i <= len)
      ++next[i - 1];
    else
      next.push_back(1);
    if (max_length && static_cast<int>(next.size()) > *max_length) continue;
    out.emplace_back(std::move(next));
  }
  // Removals: row i is removable when part(i) > part(i+1).
  for (int i = 1; i <= len; ++i) {
    if (shape.part(i) <= shape.part(i + 1)) continue;
    std::vector<int> next(parts);
    if (--next[i - 1] == 0) next.pop_back();
    out.emplace_back(std::move(next));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline void partitions_of_rec(int remaining, int cap, std::vector<int>& prefix,
                              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    prefix.push_back(next);
    partitions_of_rec(remaining - next, next, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

// All partitions of `size`, ascending lexicographic order.
inline std::vector<Partition> partitions_of(int size) {
  if (size < 0) throw std::domain_error("partitions_of: size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_of_rec(size, size, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctm
