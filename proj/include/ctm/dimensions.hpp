#pragma once

#include <stdexcept>
#include <string>

#include "ctm/partition.hpp"
#include "ctm/rational.hpp"
#include "ctm/staircase.hpp"

namespace ctm {

enum class GroupKind { Symplectic, SpecialOrthogonalEven, SpecialOrthogonalOdd, Unitary };

// One compact classical group, identified by family and the rank parameter n:
// Sp(2n), SO(2n), SO(2n+1) or U(n).
struct GroupFamily {
  GroupKind kind;
  int rank;

  int matrix_size() const {
    switch (kind) {
      case GroupKind::Symplectic:
      case GroupKind::SpecialOrthogonalEven:
        return 2 * rank;
      case GroupKind::SpecialOrthogonalOdd:
        return 2 * rank + 1;
      case GroupKind::Unitary:
        return rank;
    }
    throw std::logic_error("unreachable");
  }

  bool real_trace() const { return kind != GroupKind::Unitary; }

  // The CLI token for the family.
  std::string token() const {
    switch (kind) {
      case GroupKind::Symplectic: return "sp";
      case GroupKind::SpecialOrthogonalEven: return "so-even";
      case GroupKind::SpecialOrthogonalOdd: return "so-odd";
      case GroupKind::Unitary: return "u";
    }
    throw std::logic_error("unreachable");
  }

  std::string describe() const {
    switch (kind) {
      case GroupKind::Symplectic: return "Sp(" + std::to_string(2 * rank) + ")";
      case GroupKind::SpecialOrthogonalEven: return "SO(" + std::to_string(2 * rank) + ")";
      case GroupKind::SpecialOrthogonalOdd: return "SO(" + std::to_string(2 * rank + 1) + ")";
      case GroupKind::Unitary: return "U(" + std::to_string(rank) + ")";
    }
    throw std::logic_error("unreachable");
  }
};

inline GroupKind parse_group_kind(const std::string& token) {
  if (token == "sp") return GroupKind::Symplectic;
  if (token == "so-even") return GroupKind::SpecialOrthogonalEven;
  if (token == "so-odd") return GroupKind::SpecialOrthogonalOdd;
  if (token == "u") return GroupKind::Unitary;
  throw std::invalid_argument("unknown group '" + token + "' (expected sp, so-even, so-odd or u)");
}

namespace detail {

inline BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0) throw std::logic_error("dimension product is not integral");
  return q;
}

inline void check_rank(int n) {
  if (n < 1) throw std::domain_error("rank must be >= 1");
}

}  // namespace detail

// --- Weyl dimension products (authoritative route) -----------------------------
//
// Each formula evaluates the Weyl dimension product for the relevant root system
// using shifted label sequences; the quotient is exact by construction and the
// division is checked anyway.

// Sp(2n), label = partition with at most n rows. Shifted labels l_i = lam_i + n - i + 1,
// dim = prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2) * prod_i l_i/m_i with m the labels of
// the empty shape.
inline BigInt dim_symplectic(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() > n)
    throw std::domain_error("symplectic label needs at most n = " + std::to_string(n) + " rows");
  std::vector<long long> l(n), m(n);
  for (int i = 1; i <= n; ++i) {
    l[i - 1] = shape.part(i) + n - i + 1;
    m[i - 1] = n - i + 1;
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= BigInt(l[i]) * l[i] - BigInt(l[j]) * l[j];
      den *= BigInt(m[i]) * m[i] - BigInt(m[j]) * m[j];
    }
  for (int i = 0; i < n; ++i) {
    num *= l[i];
    den *= m[i];
  }
  return detail::exact_quotient(num, den);
}

// SO(2n), label restricted to fewer than n rows. Shifted labels l_i = lam_i + n - i.
inline BigInt dim_so_even(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() >= n)
    throw std::domain_error("even orthogonal label needs fewer than n = " + std::to_string(n) +
                            " rows");
  std::vector<long long> l(n), m(n);
  for (int i = 1; i <= n; ++i) {
    l[i - 1] = shape.part(i) + n - i;
    m[i - 1] = n - i;
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= BigInt(l[i]) * l[i] - BigInt(l[j]) * l[j];
      den *= BigInt(m[i]) * m[i] - BigInt(m[j]) * m[j];
    }
  return detail::exact_quotient(num, den);
}

// SO(2n+1), label = partition with at most n rows. Odd shifted labels
// L_i = 2 lam_i + 2(n - i) + 1.
inline BigInt dim_so_odd(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() > n)
    throw std::domain_error("odd orthogonal label needs at most n = " + std::to_string(n) +
                            " rows");
  std::vector<long long> l(n), m(n);
  for (int i = 1; i <= n; ++i) {
    l[i - 1] = 2LL * shape.part(i) + 2LL * (n - i) + 1;
    m[i - 1] = 2LL * (n - i) + 1;
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= BigInt(l[i]) * l[i] - BigInt(l[j]) * l[j];
      den *= BigInt(m[i]) * m[i] - BigInt(m[j]) * m[j];
    }
  for (int i = 0; i < n; ++i) {
    num *= l[i];
    den *= m[i];
  }
  return detail::exact_quotient(num, den);
}

// U(n), label = weakly decreasing integer vector of length exactly n.
// dim = prod_{i<j} (g_i - g_j + j - i)/(j - i). Invariant under shifting every entry
// by the same constant.
inline BigInt dim_unitary(const Staircase& shape, int n) {
  detail::check_rank(n);
  if (shape.height() != n)
    throw std::domain_error("unitary label must have exactly n = " + std::to_string(n) +
                            " entries");
  const auto& g = shape.entries();
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= g[i] - g[j] + j - i;
      den *= j - i;
    }
  return detail::exact_quotient(num, den);
}

// --- Hook-content products (independent cross-check route) ---------------------
//
// El Samra-King style products over the boxes of the shape: one linear factor per box
// divided by the hook length. Implemented from scratch against the Weyl route; the
// two must agree exactly, and the test suite sweeps that.

inline BigInt dim_symplectic_hook_content(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() > n)
    throw std::domain_error("symplectic label needs at most n = " + std::to_string(n) + " rows");
  const Partition conj = shape.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) {
      long long factor =
          i >= j ? 2LL * n - conj.part(i) - conj.part(j) + i + j
                 : 2LL * n + shape.part(i) + shape.part(j) - i - j + 2;
      num *= factor;
      den *= hook_length(shape, i, j);
    }
  return detail::exact_quotient(num, den);
}

namespace detail {
// Shared product for both orthogonal families; matrix_size is 2n or 2n+1.
inline BigInt dim_orthogonal_hook_content(const Partition& shape, int matrix_size) {
  const Partition conj = shape.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) {
      long long factor =
          i <= j ? matrix_size + shape.part(i) + shape.part(j) - i - j
                 : matrix_size - conj.part(i) - conj.part(j) + i + j - 2;
      num *= factor;
      den *= hook_length(shape, i, j);
    }
  return exact_quotient(num, den);
}
}  // namespace detail

inline BigInt dim_so_even_hook_content(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() >= n)
    throw std::domain_error("even orthogonal label needs fewer than n = " + std::to_string(n) +
                            " rows");
  return detail::dim_orthogonal_hook_content(shape, 2 * n);
}

inline BigInt dim_so_odd_hook_content(const Partition& shape, int n) {
  detail::check_rank(n);
  if (shape.length() > n)
    throw std::domain_error("odd orthogonal label needs at most n = " + std::to_string(n) +
                            " rows");
  return detail::dim_orthogonal_hook_content(shape, 2 * n + 1);
}

}  // namespace ctm
