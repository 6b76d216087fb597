#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ctm/dimensions.hpp"
#include "ctm/rng.hpp"

namespace ctm {

struct GroupElement {
  GroupFamily group;
  Eigen::MatrixXcd matrix;  // matrix_size x matrix_size; SO stored with zero imag part
};

// J = [[0, I], [-I, 0]] of size 2n; the form preserved by the symplectic embedding.
inline Eigen::MatrixXcd symplectic_form(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, i + n) = 1.0;
    j(i + n, i) = -1.0;
  }
  return j;
}

namespace detail {

// Ginibre + Householder QR, with the R-diagonal phases folded into Q so the result is
// Haar rather than biased by the QR phase convention. Rank-deficient draws (measure
// zero, so effectively only on pathological substreams) are retried.
inline Eigen::MatrixXcd sample_unitary_matrix(int n, SampleRng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
      std::complex<double> d = qr.matrixQR()(i, i);
      double mag = std::abs(d);
      if (mag < 1e-12) {
        degenerate = true;
        break;
      }
      q.col(i) *= d / mag;
    }
    if (!degenerate) return q;
  }
  throw std::runtime_error("unitary sampler: repeated rank-deficient draws");
}

// Real Ginibre + QR with sign correction, then one fixed column flip to land in SO.
inline Eigen::MatrixXd sample_special_orthogonal_matrix(int size, SampleRng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXd g(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) g(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    bool degenerate = false;
    for (int i = 0; i < size; ++i) {
      double d = qr.matrixQR()(i, i);
      if (std::abs(d) < 1e-12) {
        degenerate = true;
        break;
      }
      if (d < 0) q.col(i) *= -1.0;
    }
    if (degenerate) continue;
    if (q.determinant() < 0) q.col(size - 1) *= -1.0;
    return q;
  }
  throw std::runtime_error("orthogonal sampler: repeated rank-deficient draws");
}

// Quaternion a + b j stored as a pair of complex numbers.
struct Quat {
  std::complex<double> a, b;
};
inline Quat qmul(const Quat& p, const Quat& q) {
  return {p.a * q.a - p.b * std::conj(q.b), p.a * q.b + p.b * std::conj(q.a)};
}
inline Quat qconj(const Quat& q) { return {std::conj(q.a), -q.b}; }
inline double qnorm2(const Quat& q) { return std::norm(q.a) + std::norm(q.b); }

// Quaternion Ginibre + modified Gram-Schmidt (two passes) with real-positive column
// norms. The quaternion-unitary result embeds into U(2n) as [[A, B], [-conj B, conj A]],
// which preserves the form J exactly; this is the compact symplectic group.
inline Eigen::MatrixXcd sample_compact_symplectic_matrix(int n, SampleRng& rng) {
  using Column = std::vector<Quat>;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Column> raw(n, Column(n));
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row)
        raw[col][row] = {rng.next_complex_gaussian(), rng.next_complex_gaussian()};

    std::vector<Column> basis;
    basis.reserve(n);
    bool degenerate = false;
    for (int col = 0; col < n; ++col) {
      Column v = raw[col];
      for (int pass = 0; pass < 2; ++pass)
        for (const Column& u : basis) {
          Quat r{0.0, 0.0};
          for (int row = 0; row < n; ++row) {
            Quat t = qmul(qconj(u[row]), v[row]);
            r.a += t.a;
            r.b += t.b;
          }
          for (int row = 0; row < n; ++row) {
            Quat t = qmul(u[row], r);
            v[row].a -= t.a;
            v[row].b -= t.b;
          }
        }
      double norm2 = 0.0;
      for (int row = 0; row < n; ++row) norm2 += qnorm2(v[row]);
      double norm = std::sqrt(norm2);
      if (norm < 1e-8) {
        degenerate = true;
        break;
      }
      for (int row = 0; row < n; ++row) {
        v[row].a /= norm;
        v[row].b /= norm;
      }
      basis.push_back(std::move(v));
    }
    if (degenerate) continue;

    Eigen::MatrixXcd u(2 * n, 2 * n);
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) {
        const Quat& q = basis[col][row];
        u(row, col) = q.a;
        u(row, col + n) = q.b;
        u(row + n, col) = -std::conj(q.b);
        u(row + n, col + n) = std::conj(q.a);
      }
    return u;
  }
  throw std::runtime_error("symplectic sampler: repeated rank-deficient draws");
}

}  // namespace detail

// One Haar-distributed element. Consumes the generator in a fixed order, so a given
// (seed, stream) pair always yields the same matrix.
inline GroupElement sample_haar(const GroupFamily& group, SampleRng& rng) {
  if (group.rank < 1) throw std::domain_error("rank must be >= 1");
  switch (group.kind) {
    case GroupKind::Unitary:
      return {group, detail::sample_unitary_matrix(group.rank, rng)};
    case GroupKind::SpecialOrthogonalEven:
    case GroupKind::SpecialOrthogonalOdd:
      return {group, detail::sample_special_orthogonal_matrix(group.matrix_size(), rng)
                         .cast<std::complex<double>>()};
    case GroupKind::Symplectic:
      return {group, detail::sample_compact_symplectic_matrix(group.rank, rng)};
  }
  throw std::logic_error("unreachable");
}

struct MembershipResiduals {
  double unitarity = 0.0;       // max |U* U - I|
  double realness = 0.0;        // max |Im U|, orthogonal families only
  double determinant = 0.0;     // |det U - 1|, orthogonal families only
  double symplectic_form = 0.0; // max |U^T J U - J|, symplectic family only
};

inline MembershipResiduals membership_residuals(const GroupElement& e) {
  MembershipResiduals out;
  const auto& u = e.matrix;
  const int size = e.group.matrix_size();
  if (u.rows() != size || u.cols() != size)
    throw std::domain_error("element matrix has the wrong size");
  out.unitarity = (u.adjoint() * u - Eigen::MatrixXcd::Identity(size, size))
                      .cwiseAbs()
                      .maxCoeff();
  if (e.group.kind == GroupKind::SpecialOrthogonalEven ||
      e.group.kind == GroupKind::SpecialOrthogonalOdd) {
    out.realness = u.imag().cwiseAbs().maxCoeff();
    out.determinant = std::abs(u.determinant() - 1.0);
  }
  if (e.group.kind == GroupKind::Symplectic) {
    Eigen::MatrixXcd j = symplectic_form(e.group.rank);
    out.symplectic_form = (u.transpose() * j * u - j).cwiseAbs().maxCoeff();
  }
  return out;
}

inline bool is_group_member(const GroupElement& e) {
  MembershipResiduals res = membership_residuals(e);
  if (res.unitarity > 1e-10) return false;
  if (e.group.kind == GroupKind::SpecialOrthogonalEven ||
      e.group.kind == GroupKind::SpecialOrthogonalOdd) {
    if (res.realness > 1e-12) return false;
    if (res.determinant > 1e-8) return false;
  }
  if (e.group.kind == GroupKind::Symplectic && res.symplectic_form > 1e-8) return false;
  return true;
}

// x^{-1} y^{-1} x y, with inverses taken as conjugate transposes (exact on the group,
// and numerically stabler than a linear solve).
inline Eigen::MatrixXcd group_commutator(const GroupElement& x, const GroupElement& y) {
  if (x.group.kind != y.group.kind || x.group.rank != y.group.rank)
    throw std::domain_error("commutator of elements from different groups");
  return (x.matrix.adjoint() * y.matrix.adjoint()) * (x.matrix * y.matrix);
}

// Tr of the product of k commutators [x_i, y_i].
inline std::complex<double> commutator_product_trace(const std::vector<GroupElement>& xs,
                                                     const std::vector<GroupElement>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::domain_error("need the same positive number of x and y elements");
  const GroupFamily& g = xs.front().group;
  const int size = g.matrix_size();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(size, size);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].group.kind != g.kind || xs[i].group.rank != g.rank ||
        ys[i].group.kind != g.kind || ys[i].group.rank != g.rank)
      throw std::domain_error("commutator product mixes different groups");
    p = p * group_commutator(xs[i], ys[i]);
  }
  return p.trace();
}

}  // namespace ctm
