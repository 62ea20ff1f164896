#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "legsym/linalg.hpp"
#include "legsym/numeric.hpp"

namespace legsym {

/// Finite-dimensional real Lie algebra in a fixed basis.
/// c[k](i, j) is the e_k coefficient of [e_i, e_j]; each c[k] is antisymmetric.
class LieAlgebra {
public:
  LieAlgebra() = default;

  static LieAlgebra from_structure(std::vector<MatrixXd> c,
                                   std::vector<std::string> labels = {},
                                   double tol = kDefaultTol) {
    LieAlgebra out = unchecked(std::move(c), std::move(labels));
    if (out.antisymmetry_residual() >= tol)
      throw std::invalid_argument(
          "LieAlgebra: structure tensor is not antisymmetric in (i, j)");
    return out;
  }

  /// Skips the antisymmetry validation; for diagnostics and negative tests.
  static LieAlgebra unchecked(std::vector<MatrixXd> c,
                              std::vector<std::string> labels = {}) {
    LieAlgebra out;
    const int n = static_cast<int>(c.size());
    for (const auto& ck : c)
      if (ck.rows() != n || ck.cols() != n)
        throw std::invalid_argument("LieAlgebra: tensor slice has wrong shape");
    out.c_ = std::move(c);
    if (labels.empty())
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("LieAlgebra: wrong number of labels");
    out.labels_ = std::move(labels);
    return out;
  }

  int dim() const { return static_cast<int>(c_.size()); }
  const std::vector<MatrixXd>& structure() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }

  VectorXd bracket(const VectorXd& x, const VectorXd& y) const {
    VectorXd out(dim());
    for (int k = 0; k < dim(); ++k) out(k) = x.dot(c_[k] * y);
    return out;
  }

  /// Matrix of ad_x acting on coordinates: (ad_x y) = ad(x) * y.
  MatrixXd ad(const VectorXd& x) const {
    MatrixXd out(dim(), dim());
    for (int k = 0; k < dim(); ++k) out.row(k) = x.transpose() * c_[k];
    return out;
  }

  MatrixXd ad_basis(int i) const {
    MatrixXd out(dim(), dim());
    for (int k = 0; k < dim(); ++k) out.row(k) = c_[k].row(i);
    return out;
  }

  double antisymmetry_residual() const {
    double r = 0.0;
    for (const auto& ck : c_) r = std::max(r, max_abs(ck + ck.transpose()));
    return r;
  }

private:
  std::vector<MatrixXd> c_;
  std::vector<std::string> labels_;
};

/// Max-norm Jacobi defect over all basis triples. Requires an antisymmetric
/// tensor; a tensor violating antisymmetry is rejected up front.
inline double jacobi_residual(const LieAlgebra& l, double tol = kDefaultTol) {
  if (l.antisymmetry_residual() >= tol)
    throw std::invalid_argument(
        "jacobi_residual: structure tensor is not antisymmetric");
  const int n = l.dim();
  std::vector<MatrixXd> ad(n);
  for (int i = 0; i < n; ++i) ad[i] = l.ad_basis(i);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // [[e_i, e_j], x] = (ad_i ad_j - ad_j ad_i) x for all x closes Jacobi.
      const MatrixXd lhs = l.ad(l.bracket(VectorXd::Unit(n, i),
                                          VectorXd::Unit(n, j)));
      worst = std::max(worst, max_abs(lhs - (ad[i] * ad[j] - ad[j] * ad[i])));
    }
  return worst;
}

/// Killing form K(x, y) = tr(ad_x ad_y).
inline BilinearForm killing_form(const LieAlgebra& l) {
  const int n = l.dim();
  std::vector<MatrixXd> ad(n);
  for (int i = 0; i < n; ++i) ad[i] = l.ad_basis(i);
  MatrixXd k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) k(i, j) = k(j, i) = (ad[i] * ad[j]).trace();
  return BilinearForm{k};
}

/// Center {x : [x, y] = 0 for all y} as an orthonormal subspace.
inline Subspace center(const LieAlgebra& l, double rel_tol = kRankRelTol) {
  const int n = l.dim();
  MatrixXd stacked(n * n, n);
  // Row block j holds the map x -> [x, e_j].
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        stacked(j * n + k, i) = l.structure()[k](i, j);
  return Subspace{null_space(stacked, rel_tol)};
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<MatrixXd> c(n, MatrixXd::Zero(n, n));
  for (int k = 0; k < na; ++k)
    c[k].topLeftCorner(na, na) = a.structure()[k];
  for (int k = 0; k < nb; ++k)
    c[na + k].bottomRightCorner(nb, nb) = b.structure()[k];
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LieAlgebra::unchecked(std::move(c), std::move(labels));
}

/// Transports the structure tensor along the isomorphism x -> m x.
inline LieAlgebra change_basis(const LieAlgebra& l, const MatrixXd& m,
                               double max_cond = kMaxBasisCond) {
  const int n = l.dim();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("change_basis: wrong matrix shape");
  if (condition_number(m) > max_cond)
    throw std::invalid_argument("change_basis: matrix is ill-conditioned");
  const MatrixXd w = m.inverse();
  // New bracket: [x, y]' = m [w x, w y].
  std::vector<MatrixXd> pulled(n);
  for (int k = 0; k < n; ++k)
    pulled[k] = w.transpose() * l.structure()[k] * w;
  std::vector<MatrixXd> c(n, MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int mm = 0; mm < n; ++mm) c[k] += m(k, mm) * pulled[mm];
  return LieAlgebra::unchecked(std::move(c), l.labels());
}

} // namespace legsym
