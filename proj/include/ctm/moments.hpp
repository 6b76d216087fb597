#pragma once

#include <stdexcept>
#include <vector>

#include "ctm/dimensions.hpp"
#include "ctm/rational.hpp"
#include "ctm/updown.hpp"

namespace ctm {

// Raised when a query is outside the regime where the exact expansion is valid
// (the orthogonal families need n > r). The CLI maps this to its own exit code.
struct RegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// E[Z^r] for Z standard real Gaussian: (r-1)!! for even r, 0 for odd r.
inline BigInt gaussian_moment(int r) {
  if (r < 0) throw std::domain_error("moment order must be >= 0");
  if (r % 2 == 1) return 0;
  BigInt value = 1;
  for (int i = r - 1; i >= 1; i -= 2) value *= i;
  return value;
}

// E[Z^r conj(Z)^s] for Z standard complex Gaussian: r! when r == s, else 0.
inline BigInt complex_gaussian_moment(int r, int s) {
  if (r < 0 || s < 0) throw std::domain_error("moment orders must be >= 0");
  if (r != s) return 0;
  BigInt value = 1;
  for (int i = 2; i <= r; ++i) value *= i;
  return value;
}

// Smallest rank at which the exact expansion holds for the family.
inline int min_admissible_rank(GroupKind kind, int r, int s = 0) {
  if (kind == GroupKind::SpecialOrthogonalEven || kind == GroupKind::SpecialOrthogonalOdd)
    return std::max(r, s) + 1;
  return 1;
}

namespace detail {

struct ExactMoment {
  Rational value;
  long terms;  // labels with a nonzero tableau count
};

// Core evaluation: a sum of tableau-count / dimension^(2k-1) over the final walk
// layer. The walk lattice and the dimension formula depend on the family.
inline ExactMoment exact_moment(const GroupFamily& group, int k, int r, int s) {
  check_rank(group.rank);
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (r < 0 || s < 0) throw std::domain_error("moment orders must be >= 0");
  if (group.real_trace() && s != 0)
    throw std::domain_error("s must be 0 for real-trace families");
  if (group.rank < min_admissible_rank(group.kind, r, s))
    throw RegimeError(group.describe() + " moment of order " + std::to_string(r) +
                      " needs n > " + std::to_string(r));

  const unsigned dim_power = 2 * static_cast<unsigned>(k) - 1;
  ExactMoment out{Rational(0), 0};
  const int n = group.rank;
  switch (group.kind) {
    case GroupKind::Symplectic:
      // Walk heights capped at n; labels then automatically fit Sp(2n).
      for (const auto& [shape, count] : updown_distribution(r, n)) {
        out.value += Rational(count, pow(dim_symplectic(shape, n), dim_power));
        ++out.terms;
      }
      break;
    case GroupKind::SpecialOrthogonalEven:
      // In the n > r regime every shape has fewer than n rows, so the unbounded
      // counts apply and all labels are admissible.
      for (const auto& [shape, count] : updown_distribution(r)) {
        out.value += Rational(count, pow(dim_so_even(shape, n), dim_power));
        ++out.terms;
      }
      break;
    case GroupKind::SpecialOrthogonalOdd:
      for (const auto& [shape, count] : updown_distribution(r)) {
        out.value += Rational(count, pow(dim_so_odd(shape, n), dim_power));
        ++out.terms;
      }
      break;
    case GroupKind::Unitary:
      for (const auto& [shape, count] :
           staircase_distribution(n, TypeVector::canonical(r, s))) {
        out.value += Rational(count, pow(dim_unitary(shape, n), dim_power));
        ++out.terms;
      }
      break;
  }
  return out;
}

}  // namespace detail

// E[(Tr W)^r] for W a product of k independent commutators of Haar elements of Sp(2n).
inline Rational moment_symplectic(int n, int k, int r) {
  return detail::exact_moment({GroupKind::Symplectic, n}, k, r, 0).value;
}

// Same for SO(2n); valid only in the n > r regime.
inline Rational moment_so_even(int n, int k, int r) {
  return detail::exact_moment({GroupKind::SpecialOrthogonalEven, n}, k, r, 0).value;
}

// Same for SO(2n+1); valid only in the n > r regime.
inline Rational moment_so_odd(int n, int k, int r) {
  return detail::exact_moment({GroupKind::SpecialOrthogonalOdd, n}, k, r, 0).value;
}

// E[(Tr W)^r conj(Tr W)^s] for U(n).
inline Rational moment_unitary(int n, int k, int r, int s) {
  return detail::exact_moment({GroupKind::Unitary, n}, k, r, s).value;
}

inline Rational trace_moment(const GroupFamily& group, int k, int r, int s = 0) {
  return detail::exact_moment(group, k, r, s).value;
}

// The n -> infinity limit of the corresponding moment: real Gaussian for the real
// families, complex Gaussian for the unitary one.
inline Rational gaussian_limit(GroupKind kind, int r, int s = 0) {
  if (kind == GroupKind::Unitary) return Rational(complex_gaussian_moment(r, s));
  if (s != 0) throw std::domain_error("s must be 0 for real-trace families");
  return Rational(gaussian_moment(r));
}

struct MomentRow {
  int n;
  long terms;
  Rational exact;
  Rational limit;
  Rational gap;  // |exact - limit|
};

// Exact moment, Gaussian limit and gap for each rank in `ns` (every rank must be in
// the family's admissible regime; filter with min_admissible_rank first).
inline std::vector<MomentRow> clt_report(GroupKind kind, int k, int r, int s,
                                         const std::vector<int>& ns) {
  std::vector<MomentRow> rows;
  rows.reserve(ns.size());
  const Rational limit = gaussian_limit(kind, r, s);
  for (int n : ns) {
    auto exact = detail::exact_moment({kind, n}, k, r, s);
    Rational gap = exact.value - limit;
    if (gap < 0) gap = -gap;
    rows.push_back({n, exact.terms, exact.value, limit, gap});
  }
  return rows;
}

}  // namespace ctm
