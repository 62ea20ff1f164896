#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>

#include "legsym/numeric.hpp"

namespace legsym {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

/// Largest absolute entry; 0 for empty matrices.
inline double max_abs(const MatrixXd& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double symmetry_residual(const MatrixXd& a) {
  return max_abs(a - a.transpose());
}

/// Symmetric bilinear form on h-coordinates.
struct BilinearForm {
  MatrixXd matrix;

  double operator()(const VectorXd& x, const VectorXd& y) const {
    return x.dot(matrix * y);
  }
};

/// Linear map between coordinate spaces.
struct LinearOperator {
  MatrixXd matrix;
};

/// Orthonormal basis of the column span of a. Rank cut at
/// rel_tol * max(sigma_max, scale); pass the natural scale of the problem
/// when a itself may be pure noise of a larger computation.
inline MatrixXd orthonormal_range(const MatrixXd& a,
                                  double rel_tol = kRankRelTol,
                                  double scale = 0.0) {
  if (a.cols() == 0 || max_abs(a) == 0.0)
    return MatrixXd::Zero(a.rows(), 0);
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeThinU);
  const double cut = rel_tol * std::max(svd.singularValues()(0), scale);
  int rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cut)
    ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of the null space of a; for a == 0 the whole domain.
/// The rank cut honors an external scale exactly as in orthonormal_range.
inline MatrixXd null_space(const MatrixXd& a, double rel_tol = kRankRelTol,
                           double scale = 0.0) {
  if (a.rows() == 0 || max_abs(a) == 0.0)
    return MatrixXd::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
  const double cut = rel_tol * std::max(svd.singularValues()(0), scale);
  int rank = 0;
  while (rank < std::min(a.rows(), a.cols()) &&
         svd.singularValues()(rank) > cut)
    ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

inline int matrix_rank(const MatrixXd& a, double rel_tol = kRankRelTol) {
  if (a.size() == 0 || max_abs(a) == 0.0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(a);
  const double cut = rel_tol * svd.singularValues()(0);
  int rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > cut)
    ++rank;
  return rank;
}

inline double condition_number(const MatrixXd& a) {
  Eigen::JacobiSVD<MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0)
    return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

/// Linear subspace given by an orthonormal column basis.
struct Subspace {
  MatrixXd basis;

  int dim() const { return static_cast<int>(basis.cols()); }
  int ambient_dim() const { return static_cast<int>(basis.rows()); }

  static Subspace from_span(const MatrixXd& span,
                            double rel_tol = kRankRelTol) {
    return Subspace{orthonormal_range(span, rel_tol)};
  }

  /// Euclidean-orthogonal projector onto the subspace.
  MatrixXd projector() const { return basis * basis.transpose(); }

  /// Distance of v from the subspace, measured per component.
  double containment_residual(const VectorXd& v) const {
    return max_abs(v - basis * (basis.transpose() * v));
  }
};

/// sin of the largest principal angle; 1 when dimensions differ.
inline double subspace_gap(const Subspace& u, const Subspace& v) {
  if (u.dim() != v.dim()) return 1.0;
  if (u.dim() == 0) return 0.0;
  MatrixXd d = u.projector() - v.projector();
  Eigen::JacobiSVD<MatrixXd> svd(d);
  return svd.singularValues()(0);
}

/// Rescales orthonormal columns q to be orthonormal for the inner product b;
/// b must be symmetric positive definite on span(q).
inline MatrixXd b_orthonormalize(const MatrixXd& q, const MatrixXd& b) {
  if (q.cols() == 0) return q;
  const MatrixXd gram = q.transpose() * b * q;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument(
        "b_orthonormalize: form is not positive definite on the subspace");
  const MatrixXd inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().transpose();
  return q * inv_sqrt;
}

} // namespace legsym
