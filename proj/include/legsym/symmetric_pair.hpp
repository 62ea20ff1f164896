#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "legsym/lie_algebra.hpp"
#include "legsym/report.hpp"

namespace legsym {

/// Worst deviation of the map s from respecting the bracket of the algebra.
inline double automorphism_residual(const LieAlgebra& algebra,
                                    const MatrixXd& s) {
  const int n = algebra.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const VectorXd lhs =
          s * algebra.bracket(VectorXd::Unit(n, i), VectorXd::Unit(n, j));
      const VectorXd rhs = algebra.bracket(s.col(i), s.col(j));
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  return worst;
}

/// Lie algebra with an involutive automorphism s; g and p are the +1 and -1
/// eigenspaces, so [g,g] c g, [g,p] c p, [p,p] c g.
struct SymmetricLieAlgebra {
  LieAlgebra algebra;
  MatrixXd s;
  Subspace g;
  Subspace p;

  int dim() const { return algebra.dim(); }

  double automorphism_residual() const {
    return legsym::automorphism_residual(algebra, s);
  }

  /// Validates s^2 = 1, s != 1, and the automorphism property, then splits.
  static SymmetricLieAlgebra make(LieAlgebra algebra, MatrixXd s,
                                  double tol = kDefaultTol) {
    const int n = algebra.dim();
    if (s.rows() != n || s.cols() != n)
      throw std::invalid_argument("SymmetricLieAlgebra: wrong s shape");
    if (max_abs(s * s - MatrixXd::Identity(n, n)) >= tol)
      throw std::invalid_argument("SymmetricLieAlgebra: s is not involutive");
    if (max_abs(s - MatrixXd::Identity(n, n)) < tol)
      throw std::invalid_argument("SymmetricLieAlgebra: s is the identity");
    const double worst = legsym::automorphism_residual(algebra, s);
    if (worst >= tol)
      throw std::invalid_argument(
          "SymmetricLieAlgebra: s is not an automorphism (residual " +
          std::to_string(worst) + ")");
    return unchecked(std::move(algebra), std::move(s));
  }

  /// Splits without validating; for diagnostics and negative tests.
  static SymmetricLieAlgebra unchecked(LieAlgebra algebra, MatrixXd s) {
    const int n = algebra.dim();
    const MatrixXd id = MatrixXd::Identity(n, n);
    Subspace g = Subspace::from_span(0.5 * (id + s));
    Subspace p = Subspace::from_span(0.5 * (id - s));
    return SymmetricLieAlgebra{std::move(algebra), std::move(s), std::move(g),
                               std::move(p)};
  }
};

/// Residuals of the eigenspace bracket relations.
inline ResidualReport check_bracket_relations(const SymmetricLieAlgebra& sym,
                                              double tol = kDefaultTol) {
  const MatrixXd& gb = sym.g.basis;
  const MatrixXd& pb = sym.p.basis;
  // Eigenprojectors of s; exact in any basis, unlike the Euclidean
  // projectors onto the eigenspaces.
  const int n = sym.algebra.dim();
  const MatrixXd pg = 0.5 * (MatrixXd::Identity(n, n) + sym.s);
  const MatrixXd pp = 0.5 * (MatrixXd::Identity(n, n) - sym.s);
  double gg = 0.0, gp = 0.0, ppr = 0.0;
  for (int i = 0; i < gb.cols(); ++i) {
    for (int j = 0; j < gb.cols(); ++j)
      gg = std::max(gg,
                    max_abs(pp * sym.algebra.bracket(gb.col(i), gb.col(j))));
    for (int j = 0; j < pb.cols(); ++j)
      gp = std::max(gp,
                    max_abs(pg * sym.algebra.bracket(gb.col(i), pb.col(j))));
  }
  for (int i = 0; i < pb.cols(); ++i)
    for (int j = 0; j < pb.cols(); ++j)
      ppr = std::max(ppr,
                     max_abs(pp * sym.algebra.bracket(pb.col(i), pb.col(j))));
  ResidualReport report;
  report.add("bracket_gg_in_g", gg, tol);
  report.add("bracket_gp_in_p", gp, tol);
  report.add("bracket_pp_in_g", ppr, tol);
  return report;
}

struct OrthogonalityResult {
  bool ok = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

/// Whether -kappa restricted to g is positive definite (orthogonal pair).
inline OrthogonalityResult is_orthogonal(const SymmetricLieAlgebra& sym,
                                         double rel_tol = kRankRelTol) {
  if (sym.g.dim() == 0) return {false, 0.0, 0.0};
  const MatrixXd b = -killing_form(sym.algebra).matrix;
  const MatrixXd gram = sym.g.basis.transpose() * b * sym.g.basis;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  return {hi > 0.0 && lo > rel_tol * hi, lo, hi};
}

struct EffectivenessResult {
  bool ok = false;
  int intersection_dim = 0;
};

/// Whether g meets the center of h only in 0 (effective pair).
inline EffectivenessResult is_effective(const SymmetricLieAlgebra& sym,
                                        double rel_tol = kRankRelTol) {
  const Subspace z = center(sym.algebra, rel_tol);
  if (z.dim() == 0 || sym.g.dim() == 0) return {true, 0};
  MatrixXd joint(sym.dim(), sym.g.dim() + z.dim());
  joint << sym.g.basis, z.basis;
  const int isect = sym.g.dim() + z.dim() - matrix_rank(joint, rel_tol);
  return {isect == 0, isect};
}

} // namespace legsym
