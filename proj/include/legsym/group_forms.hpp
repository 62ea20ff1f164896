#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "legsym/catalog.hpp"
#include "legsym/legendrian.hpp"
#include "legsym/matrix_exp.hpp"

namespace legsym {

enum class ModelCase { Euclidean, Compact, Noncompact };

inline const char* model_case_name(ModelCase m) {
  switch (m) {
    case ModelCase::Euclidean: return "euclidean";
    case ModelCase::Compact: return "compact";
    default: return "noncompact";
  }
}

inline ModelCase parse_model_case(const std::string& name) {
  if (name == "euclidean") return ModelCase::Euclidean;
  if (name == "compact") return ModelCase::Compact;
  if (name == "noncompact") return ModelCase::Noncompact;
  throw std::invalid_argument("unknown model case: " + name);
}

/// Group element of a matrix realization. compact: (u1, u2) unitary pair;
/// noncompact: u1 in the complexified group; euclidean: unitary u1 plus the
/// dual-coordinate translation ell.
struct GroupPoint {
  MatrixXcd u1;
  MatrixXcd u2;
  VectorXd ell;
};

/// Matrix-group model of a canonical Legendrian symmetric algebra over a
/// compact base algebra with a faithful anti-Hermitian matrix basis.
struct GroupRealization {
  ModelCase model = ModelCase::Compact;
  std::string base_name;
  LieAlgebra base;
  std::vector<MatrixXcd> rep;
  LegendrianSymmetricAlgebra alg;
  int nb = 0;  // base dimension; dim h = 2 nb
  int d = 0;   // matrix size of the representation
  MatrixXcd rep_span;        // d^2 x nb, columns vec(rep[j])
  MatrixXd proj_g, proj_p;   // algebra-side eigenprojectors of s

  MatrixXcd rho(const VectorXd& x) const {
    MatrixXcd out = MatrixXcd::Zero(d, d);
    for (int j = 0; j < nb; ++j) out += x(j) * rep[j];
    return out;
  }

  /// Complex coordinates of a matrix in the complexified base algebra.
  Eigen::VectorXcd matrix_coords(const MatrixXcd& z) const {
    const Eigen::Map<const Eigen::VectorXcd> v(z.data(), z.size());
    return rep_span.colPivHouseholderQr().solve(v);
  }

  /// h-coordinates of a base element: diagonal for the compact model, the
  /// first factor otherwise.
  VectorXd embed_base(const VectorXd& xi) const {
    VectorXd out = VectorXd::Zero(2 * nb);
    out.head(nb) = xi;
    if (model == ModelCase::Compact) out.tail(nb) = xi;
    return out;
  }
};

inline GroupRealization make_realization(ModelCase model,
                                         const std::string& base_name) {
  GroupRealization r;
  r.model = model;
  r.base_name = base_name;
  r.base = builtin_algebra(base_name);
  r.rep = builtin_matrix_basis(base_name);
  switch (model) {
    case ModelCase::Euclidean: r.alg = build_euclidean(r.base); break;
    case ModelCase::Compact: r.alg = build_compact(r.base); break;
    case ModelCase::Noncompact: r.alg = build_noncompact(r.base); break;
  }
  r.nb = r.base.dim();
  r.d = static_cast<int>(r.rep[0].rows());
  r.rep_span.resize(r.d * r.d, r.nb);
  for (int j = 0; j < r.nb; ++j)
    r.rep_span.col(j) =
        Eigen::Map<const Eigen::VectorXcd>(r.rep[j].data(), r.d * r.d);
  const int n = 2 * r.nb;
  r.proj_g = 0.5 * (MatrixXd::Identity(n, n) + r.alg.sym.s);
  r.proj_p = 0.5 * (MatrixXd::Identity(n, n) - r.alg.sym.s);
  return r;
}

// ---- group operations ----

inline GroupPoint group_identity(const GroupRealization& r) {
  GroupPoint p;
  p.u1 = MatrixXcd::Identity(r.d, r.d);
  if (r.model == ModelCase::Compact) p.u2 = p.u1;
  if (r.model == ModelCase::Euclidean) p.ell = VectorXd::Zero(r.nb);
  return p;
}

/// Base-algebra adjoint matrix of a single unitary factor, by pulling the
/// conjugated basis back through the representation.
inline MatrixXd base_adjoint(const GroupRealization& r, const MatrixXcd& u) {
  const MatrixXcd u_inv = u.inverse();
  MatrixXd out(r.nb, r.nb);
  for (int j = 0; j < r.nb; ++j)
    out.col(j) = r.matrix_coords(u * r.rep[j] * u_inv).real();
  return out;
}

inline GroupPoint group_mul(const GroupRealization& r, const GroupPoint& a,
                            const GroupPoint& b) {
  GroupPoint p;
  p.u1 = a.u1 * b.u1;
  if (r.model == ModelCase::Compact) p.u2 = a.u2 * b.u2;
  if (r.model == ModelCase::Euclidean) {
    // (g1, l1)(g2, l2) = (g1 g2, l1 + Ad*_{g1} l2).
    const MatrixXd ad = base_adjoint(r, a.u1);
    p.ell = a.ell + ad.inverse().transpose() * b.ell;
  }
  return p;
}

inline GroupPoint group_inv(const GroupRealization& r, const GroupPoint& a) {
  GroupPoint p;
  p.u1 = a.u1.inverse();
  if (r.model == ModelCase::Compact) p.u2 = a.u2.inverse();
  if (r.model == ModelCase::Euclidean) {
    const MatrixXd ad = base_adjoint(r, a.u1);
    p.ell = -(ad.transpose() * a.ell);
  }
  return p;
}

/// exp of an algebra element in h-coordinates. The euclidean translation part
/// comes from the affine (nb+1) matrix exponential, not from differencing.
inline GroupPoint group_exp(const GroupRealization& r, const VectorXd& zeta) {
  GroupPoint p;
  const VectorXd x = zeta.head(r.nb);
  const VectorXd y = zeta.tail(r.nb);
  switch (r.model) {
    case ModelCase::Compact:
      p.u1 = expm<Complex>(r.rho(x));
      p.u2 = expm<Complex>(r.rho(y));
      break;
    case ModelCase::Noncompact:
      p.u1 = expm<Complex>(r.rho(x) + Complex(0, 1) * r.rho(y));
      break;
    case ModelCase::Euclidean: {
      p.u1 = expm<Complex>(r.rho(x));
      MatrixXd affine = MatrixXd::Zero(r.nb + 1, r.nb + 1);
      affine.topLeftCorner(r.nb, r.nb) = -r.base.ad(x).transpose();
      affine.topRightCorner(r.nb, 1) = y;
      const MatrixXd e = expm<double>(affine);
      p.ell = e.topRightCorner(r.nb, 1);
      break;
    }
  }
  return p;
}

inline GroupPoint group_sigma(const GroupRealization& r, const GroupPoint& a) {
  GroupPoint p;
  switch (r.model) {
    case ModelCase::Compact:
      p.u1 = a.u2;
      p.u2 = a.u1;
      break;
    case ModelCase::Noncompact:
      p.u1 = a.u1.adjoint().inverse();
      break;
    case ModelCase::Euclidean:
      p.u1 = a.u1;
      p.ell = -a.ell;
      break;
  }
  return p;
}

inline double point_distance(const GroupRealization& r, const GroupPoint& a,
                             const GroupPoint& b) {
  double out = (a.u1 - b.u1).cwiseAbs().maxCoeff();
  if (r.model == ModelCase::Compact)
    out = std::max(out, (a.u2 - b.u2).cwiseAbs().maxCoeff());
  if (r.model == ModelCase::Euclidean)
    out = std::max(out, max_abs(a.ell - b.ell));
  return out;
}

/// Adjoint action on h-coordinates.
inline MatrixXd adjoint_of(const GroupRealization& r, const GroupPoint& a) {
  const int n = 2 * r.nb;
  MatrixXd out = MatrixXd::Zero(n, n);
  switch (r.model) {
    case ModelCase::Compact: {
      out.topLeftCorner(r.nb, r.nb) = base_adjoint(r, a.u1);
      out.bottomRightCorner(r.nb, r.nb) = base_adjoint(r, a.u2);
      break;
    }
    case ModelCase::Noncompact: {
      // Conjugate rho(e_k) and i rho(e_k); complex coordinates split into
      // the real and imaginary h-blocks.
      const MatrixXcd u_inv = a.u1.inverse();
      for (int j = 0; j < r.nb; ++j) {
        const Eigen::VectorXcd c =
            r.matrix_coords(a.u1 * r.rep[j] * u_inv);
        out.col(j).head(r.nb) = c.real();
        out.col(j).tail(r.nb) = c.imag();
        // Ad is complex-linear: the i e_j column is i times the e_j one.
        out.col(r.nb + j).head(r.nb) = -c.imag();
        out.col(r.nb + j).tail(r.nb) = c.real();
      }
      break;
    }
    case ModelCase::Euclidean: {
      // Ad_{(g,l)}(xi + mu) = Ad_g xi + (Ad*_g mu - ad*_{Ad_g xi} l).
      const MatrixXd ad = base_adjoint(r, a.u1);
      out.topLeftCorner(r.nb, r.nb) = ad;
      out.bottomRightCorner(r.nb, r.nb) = ad.inverse().transpose();
      for (int j = 0; j < r.nb; ++j)
        out.col(j).tail(r.nb) =
            r.base.ad(ad.col(j)).transpose() * a.ell;
      break;
    }
  }
  return out;
}

/// Pseudorandom group point: product of 1-3 exponentials with |zeta| <= 2.
inline GroupPoint sample_point(const GroupRealization& r, Rng& rng) {
  const int factors = 1 + static_cast<int>(rng.uniform_int(3));
  GroupPoint p = group_identity(r);
  for (int f = 0; f < factors; ++f) {
    VectorXd zeta(2 * r.nb);
    for (int i = 0; i < zeta.size(); ++i) zeta(i) = rng.gaussian();
    const double norm = zeta.norm();
    if (norm > 2.0) zeta *= 2.0 / norm;
    p = group_mul(r, p, group_exp(r, zeta));
  }
  return p;
}

inline GroupPoint sample_point(const GroupRealization& r, std::uint64_t seed) {
  Rng rng(seed);
  return sample_point(r, rng);
}

/// Pseudorandom element of the fixed subgroup G (sigma fixes it).
inline GroupPoint sample_subgroup_point(const GroupRealization& r, Rng& rng) {
  VectorXd xi(r.nb);
  for (int i = 0; i < r.nb; ++i) xi(i) = rng.gaussian();
  const double norm = xi.norm();
  if (norm > 2.0) xi *= 2.0 / norm;
  return group_exp(r, r.embed_base(xi));
}

// ---- left-invariant forms ----

/// beta(xi) at h on the frame vector zeta: Lambda(xi, Ad_h pi(zeta)).
inline double beta_eval(const GroupRealization& r, const MatrixXd& ad_h,
                        const VectorXd& xi_base, const VectorXd& zeta) {
  const VectorXd xi = r.embed_base(xi_base);
  return xi.dot(r.alg.lambda * (ad_h * (r.proj_p * zeta)));
}

/// Upsilon on frame vectors: 2 Lambda(pi1, [pi2, pi3]).
inline double upsilon_eval(const GroupRealization& r, const VectorXd& z1,
                           const VectorXd& z2, const VectorXd& z3) {
  const VectorXd p1 = r.proj_p * z1;
  const VectorXd p2 = r.proj_p * z2;
  const VectorXd p3 = r.proj_p * z3;
  return 2.0 * p1.dot(r.alg.lambda * r.alg.sym.algebra.bracket(p2, p3));
}

/// d beta(xi) on frame vectors: Lambda(xi, Ad_h 2 [pi1, pi2]).
inline double dbeta_eval(const GroupRealization& r, const MatrixXd& ad_h,
                         const VectorXd& xi_base, const VectorXd& z1,
                         const VectorXd& z2) {
  const VectorXd xi = r.embed_base(xi_base);
  const VectorXd br = r.alg.sym.algebra.bracket(r.proj_p * z1,
                                                r.proj_p * z2);
  return 2.0 * xi.dot(r.alg.lambda * (ad_h * br));
}

/// Orbit 2-form at h: Lambda(Ad_{h^-1} xi, pi(Ad_{h^-1} eta)).
inline double orbit_two_form(const GroupRealization& r,
                             const MatrixXd& ad_h_inv,
                             const VectorXd& xi_base,
                             const VectorXd& eta_base) {
  const VectorXd a = ad_h_inv * r.embed_base(xi_base);
  const VectorXd b = ad_h_inv * r.embed_base(eta_base);
  return a.dot(r.alg.lambda * (r.proj_p * b));
}

/// Null space of tau at h as base-coefficient vectors: xi with
/// Lambda(xi, Ad_h w) = 0 for every tangent direction w in p.
inline Subspace kernel_tau(const GroupRealization& r, const MatrixXd& ad_h,
                           double rel_tol = kRankRelTol) {
  MatrixXd embed_g(2 * r.nb, r.nb);
  for (int j = 0; j < r.nb; ++j)
    embed_g.col(j) = r.embed_base(VectorXd::Unit(r.nb, j));
  const MatrixXd n_mat = embed_g.transpose() * r.alg.lambda * ad_h *
                         r.alg.sym.p.basis;
  // Rank cut against the size of the factors, so a pairing matrix that is
  // pure cancellation noise is seen as zero rather than full rank.
  const double scale = r.alg.lambda.norm() * ad_h.norm();
  return Subspace{null_space(n_mat.transpose(), rel_tol, scale)};
}

/// ker(1 + sign Ad_k) restricted to embedded g, as base coefficients.
inline Subspace adjoint_kernel_on_g(const GroupRealization& r,
                                    const MatrixXd& ad_k, double sign,
                                    double rel_tol = kRankRelTol) {
  MatrixXd embed_g(2 * r.nb, r.nb);
  for (int j = 0; j < r.nb; ++j)
    embed_g.col(j) = r.embed_base(VectorXd::Unit(r.nb, j));
  const MatrixXd op =
      (MatrixXd::Identity(2 * r.nb, 2 * r.nb) + sign * ad_k) * embed_g;
  return Subspace{null_space(op, rel_tol, 2.0 * (1.0 + ad_k.norm()))};
}

} // namespace legsym
