#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>

#include "legsym/matrix_exp.hpp"
#include "legsym/numeric.hpp"
#include "legsym/symmetric_pair.hpp"

namespace legsym {

/// Symmetric Lie algebra with a Legendrian form: lambda is symmetric,
/// nondegenerate, s-skew, ad-invariant, and vanishes on g x g and p x p.
struct LegendrianSymmetricAlgebra {
  SymmetricLieAlgebra sym;
  MatrixXd lambda;
  /// Inner product the model was built from, when one was used.
  std::optional<MatrixXd> inner;

  int dim() const { return sym.dim(); }
};

/// Residuals of every Legendrian form axiom. Nondegeneracy is reported as a
/// relative deficit of sigma_min/sigma_max against the rank threshold.
inline ResidualReport validate_legendrian(const LegendrianSymmetricAlgebra& l,
                                          double tol = kDefaultTol) {
  const int n = l.dim();
  const MatrixXd& lam = l.lambda;
  ResidualReport report;
  report.add("symmetry", symmetry_residual(lam), tol);

  Eigen::JacobiSVD<MatrixXd> svd(lam);
  const double hi = svd.singularValues()(0);
  const double margin = hi == 0.0 ? 0.0 : svd.singularValues()(n - 1) / hi;
  report.add_margin("nondegeneracy", margin, kRankRelTol, tol);

  report.add("s_skew",
             max_abs(l.sym.s.transpose() * lam + lam * l.sym.s), tol);

  double ad_inv = 0.0;
  for (int i = 0; i < n; ++i) {
    const MatrixXd ad = l.sym.algebra.ad_basis(i);
    ad_inv = std::max(ad_inv, max_abs(ad.transpose() * lam + lam * ad));
  }
  report.add("ad_invariance", ad_inv, tol);

  const MatrixXd& gb = l.sym.g.basis;
  const MatrixXd& pb = l.sym.p.basis;
  report.add("g_isotropy", max_abs(gb.transpose() * lam * gb), tol);
  report.add("p_isotropy", max_abs(pb.transpose() * lam * pb), tol);
  return report;
}

/// Symmetric positive definite ad-invariant inner products only.
inline void require_invariant_inner(const LieAlgebra& g, const MatrixXd& b,
                                    double tol = kDefaultTol) {
  const int n = g.dim();
  if (b.rows() != n || b.cols() != n)
    throw std::invalid_argument("inner product has wrong shape");
  if (symmetry_residual(b) >= tol)
    throw std::invalid_argument("inner product is not symmetric");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(b);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("inner product is not positive definite");
  for (int i = 0; i < n; ++i) {
    const MatrixXd ad = g.ad_basis(i);
    if (max_abs(ad.transpose() * b + b * ad) >= tol)
      throw std::invalid_argument("inner product is not ad-invariant");
  }
}

/// -Killing form, the default inner product on a compact semisimple algebra.
inline MatrixXd default_inner(const LieAlgebra& g) {
  const MatrixXd b = -killing_form(g).matrix;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(b);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument(
        "default inner product needs -kappa positive definite "
        "(compact semisimple algebra)");
  return b;
}

/// h = g x g* with the coadjoint bracket, s = (+1 on g, -1 on g*), and the
/// dual pairing as Legendrian form. Coordinates: (xi, lambda) stacked.
inline LegendrianSymmetricAlgebra build_euclidean(const LieAlgebra& g) {
  const int n = g.dim();
  const int m = 2 * n;
  std::vector<MatrixXd> c(m, MatrixXd::Zero(m, m));
  for (int k = 0; k < n; ++k)
    c[k].topLeftCorner(n, n) = g.structure()[k];
  // [xi + mu1, eta + mu2] = [xi, eta] + ad*_xi mu2 - ad*_eta mu1 with
  // ad*_xi = -(ad_xi)^T on dual coordinates.
  for (int i = 0; i < n; ++i) {
    const MatrixXd ad_star = -g.ad_basis(i).transpose();
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        c[n + a](i, n + b) += ad_star(a, b);
        c[n + a](n + b, i) -= ad_star(a, b);
      }
  }
  std::vector<std::string> labels = g.labels();
  for (const auto& lab : g.labels()) labels.push_back(lab + "*");
  LieAlgebra h = LieAlgebra::from_structure(std::move(c), std::move(labels));

  MatrixXd s = MatrixXd::Identity(m, m);
  s.bottomRightCorner(n, n) *= -1.0;
  MatrixXd lam = MatrixXd::Zero(m, m);
  lam.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  lam.bottomLeftCorner(n, n) = MatrixXd::Identity(n, n);
  return {SymmetricLieAlgebra::make(std::move(h), std::move(s)), lam, {}};
}

/// h = g x g with the swap involution and lambda = (B, -B) / 2 on the blocks.
inline LegendrianSymmetricAlgebra build_compact(
    const LieAlgebra& g, std::optional<MatrixXd> inner = {}) {
  const MatrixXd b = inner ? *inner : default_inner(g);
  require_invariant_inner(g, b);
  const int n = g.dim();
  LieAlgebra h = direct_sum(g, g);
  MatrixXd s = MatrixXd::Zero(2 * n, 2 * n);
  s.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  s.bottomLeftCorner(n, n) = MatrixXd::Identity(n, n);
  MatrixXd lam = MatrixXd::Zero(2 * n, 2 * n);
  lam.topLeftCorner(n, n) = 0.5 * b;
  lam.bottomRightCorner(n, n) = -0.5 * b;
  return {SymmetricLieAlgebra::make(std::move(h), std::move(s)), lam, b};
}

/// h = complexification of g as a real algebra, coordinates (x, y) for
/// x + iy, with conjugation as involution and Im B_C as Legendrian form.
inline LegendrianSymmetricAlgebra build_noncompact(
    const LieAlgebra& g, std::optional<MatrixXd> inner = {}) {
  const MatrixXd b = inner ? *inner : default_inner(g);
  require_invariant_inner(g, b);
  const int n = g.dim();
  const int m = 2 * n;
  std::vector<MatrixXd> c(m, MatrixXd::Zero(m, m));
  for (int k = 0; k < n; ++k) {
    const MatrixXd& ck = g.structure()[k];
    // [x1, x2] - [y1, y2] is the real part, [x1, y2] + [y1, x2] imaginary.
    c[k].topLeftCorner(n, n) = ck;
    c[k].bottomRightCorner(n, n) = -ck;
    c[n + k].topRightCorner(n, n) = ck;
    c[n + k].bottomLeftCorner(n, n) = ck;
  }
  std::vector<std::string> labels = g.labels();
  for (const auto& lab : g.labels()) labels.push_back("i*" + lab);
  LieAlgebra h = LieAlgebra::from_structure(std::move(c), std::move(labels));

  MatrixXd s = MatrixXd::Identity(m, m);
  s.bottomRightCorner(n, n) *= -1.0;
  MatrixXd lam = MatrixXd::Zero(m, m);
  lam.topRightCorner(n, n) = b;
  lam.bottomLeftCorner(n, n) = b;
  return {SymmetricLieAlgebra::make(std::move(h), std::move(s)), lam, b};
}

inline LegendrianSymmetricAlgebra legendrian_direct_sum(
    const LegendrianSymmetricAlgebra& a, const LegendrianSymmetricAlgebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  LieAlgebra h = direct_sum(a.sym.algebra, b.sym.algebra);
  MatrixXd s = MatrixXd::Zero(n, n);
  s.topLeftCorner(na, na) = a.sym.s;
  s.bottomRightCorner(nb, nb) = b.sym.s;
  MatrixXd lam = MatrixXd::Zero(n, n);
  lam.topLeftCorner(na, na) = a.lambda;
  lam.bottomRightCorner(nb, nb) = b.lambda;
  return {SymmetricLieAlgebra::make(std::move(h), std::move(s)), lam, {}};
}

struct ScrambleResult {
  LegendrianSymmetricAlgebra algebra;
  MatrixXd map;
};

/// Conjugates the whole structure by a well-conditioned pseudorandom basis
/// change m = exp(a), spectral norm of a bounded by 1. Deterministic per seed.
inline ScrambleResult scramble(const LegendrianSymmetricAlgebra& l,
                               std::uint64_t seed) {
  const int n = l.dim();
  Rng rng(seed);
  MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
  Eigen::JacobiSVD<MatrixXd> svd(a);
  const double norm = svd.singularValues()(0);
  if (norm > 1.0) a /= norm;
  const MatrixXd m = expm<double>(a);
  const MatrixXd m_inv = m.inverse();

  LieAlgebra h = change_basis(l.sym.algebra, m);
  MatrixXd s = m * l.sym.s * m_inv;
  MatrixXd lam = m_inv.transpose() * l.lambda * m_inv;
  // The stored base inner product lives in the old coordinates; drop it.
  return {{SymmetricLieAlgebra::make(std::move(h), std::move(s)),
           std::move(lam), {}},
          m};
}

} // namespace legsym
