#pragma once

#include <Eigen/Eigenvalues>
#include <cstdint>
#include <string>
#include <vector>

#include "legsym/group_forms.hpp"
#include "legsym/report.hpp"

namespace legsym {

namespace detail {

inline VectorXd random_frame_vector(const GroupRealization& r, Rng& rng) {
  VectorXd z(2 * r.nb);
  for (int i = 0; i < z.size(); ++i) z(i) = rng.gaussian();
  return z;
}

inline VectorXd random_base_vector(const GroupRealization& r, Rng& rng) {
  VectorXd z(r.nb);
  for (int i = 0; i < z.size(); ++i) z(i) = rng.gaussian();
  return z;
}

} // namespace detail

/// Consistency of the matrix realization itself: products, inverses, exp,
/// the involution, and the adjoint action against the algebra structure.
inline ResidualReport check_realization(const GroupRealization& r,
                                        int samples, std::uint64_t seed,
                                        double tol = kFormsTol) {
  ResidualReport rep;
  Rng rng(seed);
  const LieAlgebra& h = r.alg.sym.algebra;
  const int n = 2 * r.nb;

  double inv_res = 0, ad_mul = 0, ad_exp = 0, ad_auto = 0, ad_lambda = 0;
  double sig_inv = 0, sig_hom = 0, sig_exp = 0, sig_ad = 0, member = 0;
  for (int t = 0; t < samples; ++t) {
    const GroupPoint a = sample_point(r, rng);
    const GroupPoint b = sample_point(r, rng);
    inv_res = std::max(
        inv_res, point_distance(r, group_mul(r, a, group_inv(r, a)),
                                group_identity(r)));

    const MatrixXd ada = adjoint_of(r, a);
    const MatrixXd adb = adjoint_of(r, b);
    ad_mul = std::max(ad_mul,
                      max_abs(adjoint_of(r, group_mul(r, a, b)) - ada * adb));

    VectorXd zeta = detail::random_frame_vector(r, rng);
    if (zeta.norm() > 2.0) zeta *= 2.0 / zeta.norm();
    ad_exp = std::max(ad_exp, max_abs(adjoint_of(r, group_exp(r, zeta)) -
                                      expm<double>(h.ad(zeta))));

    const VectorXd x = detail::random_frame_vector(r, rng);
    const VectorXd y = detail::random_frame_vector(r, rng);
    ad_auto = std::max(ad_auto,
                       max_abs(ada * h.bracket(x, y) -
                               h.bracket(ada * x, ada * y)));
    ad_lambda = std::max(
        ad_lambda, max_abs(ada.transpose() * r.alg.lambda * ada -
                           r.alg.lambda));

    sig_inv = std::max(
        sig_inv, point_distance(r, group_sigma(r, group_sigma(r, a)), a));
    sig_hom = std::max(
        sig_hom,
        point_distance(r, group_sigma(r, group_mul(r, a, b)),
                       group_mul(r, group_sigma(r, a), group_sigma(r, b))));
    sig_exp = std::max(
        sig_exp, point_distance(r, group_sigma(r, group_exp(r, zeta)),
                                group_exp(r, r.alg.sym.s * zeta)));
    sig_ad = std::max(sig_ad,
                      max_abs(adjoint_of(r, group_sigma(r, a)) -
                              r.alg.sym.s * ada * r.alg.sym.s));

    switch (r.model) {
      case ModelCase::Compact:
        member = std::max(
            member,
            std::max(
                (a.u1 * a.u1.adjoint() - MatrixXcd::Identity(r.d, r.d))
                    .cwiseAbs()
                    .maxCoeff(),
                (a.u2 * a.u2.adjoint() - MatrixXcd::Identity(r.d, r.d))
                    .cwiseAbs()
                    .maxCoeff()));
        break;
      case ModelCase::Noncompact:
        member = std::max(member, std::abs(a.u1.determinant() - 1.0));
        break;
      case ModelCase::Euclidean:
        member = std::max(
            member, (a.u1 * a.u1.adjoint() - MatrixXcd::Identity(r.d, r.d))
                        .cwiseAbs()
                        .maxCoeff());
        break;
    }
  }

  // The noncompact matrix bracket must reproduce the structure constants of
  // the built model; the euclidean affine representation likewise.
  double embed_bracket = 0;
  if (r.model == ModelCase::Noncompact) {
    const Complex im(0, 1);
    for (int i = 0; i < n; ++i) {
      const MatrixXcd mi =
          i < r.nb ? r.rep[i] : MatrixXcd(im * r.rep[i - r.nb]);
      for (int j = i + 1; j < n; ++j) {
        const MatrixXcd mj =
            j < r.nb ? r.rep[j] : MatrixXcd(im * r.rep[j - r.nb]);
        const VectorXd c =
            h.bracket(VectorXd::Unit(n, i), VectorXd::Unit(n, j));
        MatrixXcd expect = MatrixXcd::Zero(r.d, r.d);
        for (int k = 0; k < r.nb; ++k)
          expect += (c(k) + im * c(r.nb + k)) * r.rep[k];
        embed_bracket = std::max(
            embed_bracket,
            (mi * mj - mj * mi - expect).cwiseAbs().maxCoeff());
      }
    }
  } else if (r.model == ModelCase::Euclidean) {
    const auto affine = [&](const VectorXd& zeta) {
      MatrixXd m = MatrixXd::Zero(r.nb + 1, r.nb + 1);
      m.topLeftCorner(r.nb, r.nb) = -r.base.ad(zeta.head(r.nb)).transpose();
      m.topRightCorner(r.nb, 1) = zeta.tail(r.nb);
      return m;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const VectorXd ei = VectorXd::Unit(n, i);
        const VectorXd ej = VectorXd::Unit(n, j);
        const MatrixXd mi = affine(ei);
        const MatrixXd mj = affine(ej);
        embed_bracket = std::max(
            embed_bracket,
            max_abs(mi * mj - mj * mi - affine(h.bracket(ei, ej))));
      }
  } else {
    for (int i = 0; i < r.nb; ++i)
      for (int j = i + 1; j < r.nb; ++j) {
        const MatrixXcd br = r.rep[i] * r.rep[j] - r.rep[j] * r.rep[i];
        const VectorXd c = r.base.bracket(VectorXd::Unit(r.nb, i),
                                          VectorXd::Unit(r.nb, j));
        embed_bracket = std::max(
            embed_bracket, (br - r.rho(c)).cwiseAbs().maxCoeff());
      }
  }

  rep.add("group_inverse", inv_res, tol);
  rep.add("group_membership", member, tol);
  rep.add("adjoint_multiplicative", ad_mul, tol);
  rep.add("adjoint_exp_consistency", ad_exp, tol);
  rep.add("adjoint_automorphism", ad_auto, tol);
  rep.add("adjoint_preserves_lambda", ad_lambda, tol);
  rep.add("sigma_involution", sig_inv, tol);
  rep.add("sigma_homomorphism", sig_hom, tol);
  rep.add("sigma_exp_intertwines", sig_exp, tol);
  rep.add("sigma_adjoint_intertwines", sig_ad, tol);
  rep.add("matrix_bracket_matches_structure", embed_bracket, tol);
  return rep;
}

/// Moment 1-forms beta(xi): invariance under the right subgroup action,
/// vanishing on subgroup directions, left equivariance, and the vanishing
/// self-contraction along the generating field of xi.
inline ResidualReport check_prop_tau(const GroupRealization& r, int points,
                                     int frames, std::uint64_t seed,
                                     double tol = kFormsTol) {
  ResidualReport rep;
  Rng rng(seed);
  double right_inv = 0, horizontal = 0, left_equiv = 0, self_contr = 0;
  for (int t = 0; t < points; ++t) {
    const GroupPoint h = sample_point(r, rng);
    const MatrixXd ad_h = adjoint_of(r, h);
    const GroupPoint g = sample_subgroup_point(r, rng);
    const MatrixXd ad_hg = adjoint_of(r, group_mul(r, h, g));
    const MatrixXd ad_g_inv = adjoint_of(r, group_inv(r, g));
    const MatrixXd ad_gh = adjoint_of(r, group_mul(r, group_inv(r, g), h));
    const MatrixXd base_ad_g = base_adjoint(r, g.u1);

    for (int f = 0; f < frames; ++f) {
      const VectorXd xi = detail::random_base_vector(r, rng);
      const VectorXd zeta = detail::random_frame_vector(r, rng);
      const VectorXd eta = detail::random_base_vector(r, rng);

      right_inv = std::max(
          right_inv, std::abs(beta_eval(r, ad_hg, xi, ad_g_inv * zeta) -
                              beta_eval(r, ad_h, xi, zeta)));
      horizontal = std::max(
          horizontal, std::abs(beta_eval(r, ad_h, xi, r.embed_base(eta))));
      left_equiv = std::max(
          left_equiv, std::abs(beta_eval(r, ad_gh, xi, zeta) -
                               beta_eval(r, ad_h, base_ad_g * xi, zeta)));
      self_contr = std::max(
          self_contr,
          std::abs(beta_eval(r, ad_h, xi,
                             ad_h.inverse() * r.embed_base(xi))));
    }
  }
  rep.add("beta_right_invariant", right_inv, tol);
  rep.add("beta_horizontal", horizontal, tol);
  rep.add("beta_left_equivariant", left_equiv, tol);
  rep.add("beta_self_contraction", self_contr, tol);
  return rep;
}

/// The cubic form Upsilon: Maurer-Cartan structure equations for the frame
/// components, closedness, the interior-product identity against d beta, and
/// agreement of both evaluation paths for each form.
inline ResidualReport check_prop_xi(const GroupRealization& r, int points,
                                    int frames, std::uint64_t seed,
                                    double tol = kFormsTol) {
  ResidualReport rep;
  Rng rng(seed);
  const LieAlgebra& h = r.alg.sym.algebra;

  double mc_gamma = 0, mc_pi = 0, d_upsilon = 0, interior = 0;
  double alternating = 0, dbeta_paths = 0, upsilon_paths = 0;
  for (int t = 0; t < points; ++t) {
    const GroupPoint pt = sample_point(r, rng);
    const MatrixXd ad_h = adjoint_of(r, pt);
    const MatrixXd ad_h_inv = ad_h.inverse();

    for (int f = 0; f < frames; ++f) {
      const VectorXd z1 = detail::random_frame_vector(r, rng);
      const VectorXd z2 = detail::random_frame_vector(r, rng);
      const VectorXd z3 = detail::random_frame_vector(r, rng);
      const VectorXd z4 = detail::random_frame_vector(r, rng);
      const VectorXd xi = detail::random_base_vector(r, rng);

      // d gamma = -1/2([gamma,gamma] + [pi,pi]) on left-invariant frames
      // reads gamma([z1,z2]) = [gamma1,gamma2] + [pi1,pi2]; likewise for pi.
      const VectorXd br = h.bracket(z1, z2);
      mc_gamma = std::max(
          mc_gamma,
          max_abs(VectorXd(r.proj_g * br -
                           h.bracket(r.proj_g * z1, r.proj_g * z2) -
                           h.bracket(r.proj_p * z1, r.proj_p * z2))));
      mc_pi = std::max(
          mc_pi, max_abs(VectorXd(r.proj_p * br -
                                  h.bracket(r.proj_g * z1, r.proj_p * z2) -
                                  h.bracket(r.proj_p * z1, r.proj_g * z2))));

      // d Upsilon(z1..z4) with constant frame coefficients.
      const VectorXd* zs[4] = {&z1, &z2, &z3, &z4};
      double dv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          std::vector<const VectorXd*> rest;
          for (int k = 0; k < 4; ++k)
            if (k != i && k != j) rest.push_back(zs[k]);
          const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
          dv += sign * upsilon_eval(r, h.bracket(*zs[i], *zs[j]), *rest[0],
                                    *rest[1]);
        }
      d_upsilon = std::max(d_upsilon, std::abs(dv));

      // iota(xi_L) Upsilon = d beta(xi); xi_L has frame value Ad_{h^-1} xi.
      interior = std::max(
          interior,
          std::abs(upsilon_eval(r, ad_h_inv * r.embed_base(xi), z1, z2) -
                   dbeta_eval(r, ad_h, xi, z1, z2)));

      const double u123 = upsilon_eval(r, z1, z2, z3);
      alternating = std::max(
          alternating,
          std::max(std::abs(upsilon_eval(r, z2, z1, z3) + u123),
                   std::abs(upsilon_eval(r, z1, z3, z2) + u123)));

      // Second evaluation path for d beta through the Leibniz expansion of
      // the invariant 1-form: X(beta(Y)) - Y(beta(X)) - beta([X,Y]).
      const VectorXd leib = h.bracket(z1, r.proj_p * z2) -
                            h.bracket(z2, r.proj_p * z1) -
                            r.proj_p * h.bracket(z1, z2);
      const double brute =
          r.embed_base(xi).dot(r.alg.lambda * (ad_h * leib));
      dbeta_paths = std::max(
          dbeta_paths, std::abs(brute - dbeta_eval(r, ad_h, xi, z1, z2)));

      // Second path for Upsilon: full alternation of Lambda(pi, 2[pi, pi])/3.
      const double sym_path =
          (upsilon_eval(r, z1, z2, z3) - upsilon_eval(r, z2, z1, z3) +
           upsilon_eval(r, z3, z1, z2)) /
          3.0;
      upsilon_paths = std::max(upsilon_paths, std::abs(sym_path - u123));
    }
  }
  rep.add("structure_equation_gamma", mc_gamma, tol);
  rep.add("structure_equation_pi", mc_pi, tol);
  rep.add("upsilon_closed", d_upsilon, tol);
  rep.add("interior_product_matches_dbeta", interior, tol);
  rep.add("upsilon_alternating", alternating, tol);
  rep.add("dbeta_two_paths", dbeta_paths, tol);
  rep.add("upsilon_two_paths", upsilon_paths, tol);
  return rep;
}

/// Orbit 2-form antisymmetry over sampled points and base vectors.
inline ResidualReport check_orbit_form(const GroupRealization& r, int points,
                                       int frames, std::uint64_t seed,
                                       double tol = kFormsTol) {
  ResidualReport rep;
  Rng rng(seed);
  double antisym = 0;
  for (int t = 0; t < points; ++t) {
    const MatrixXd ad_h_inv =
        adjoint_of(r, group_inv(r, sample_point(r, rng)));
    for (int f = 0; f < frames; ++f) {
      const VectorXd xi = detail::random_base_vector(r, rng);
      const VectorXd eta = detail::random_base_vector(r, rng);
      antisym = std::max(antisym,
                         std::abs(orbit_two_form(r, ad_h_inv, xi, eta) +
                                  orbit_two_form(r, ad_h_inv, eta, xi)));
    }
  }
  rep.add("orbit_form_antisymmetric", antisym, tol);
  return rep;
}

/// Degeneracy bookkeeping at one point: the kernel of the orbit 2-form and
/// the kernel of tau, both pushed to the tangent space, must agree, and the
/// tau kernel must match ker(1 + Ad_k) for k = sigma(h) h^-1.
inline ResidualReport check_min_degeneracy(const GroupRealization& r,
                                           const GroupPoint& pt,
                                           double tol = kDefaultTol) {
  ResidualReport rep;
  const MatrixXd ad_h = adjoint_of(r, pt);
  const MatrixXd ad_h_inv = ad_h.inverse();
  const GroupPoint k = group_mul(r, group_sigma(r, pt), group_inv(r, pt));
  const MatrixXd ad_k = adjoint_of(r, k);

  const Subspace ker_t = kernel_tau(r, ad_h);
  const Subspace ker_plus = adjoint_kernel_on_g(r, ad_k, 1.0);
  rep.add("kernel_tau_vs_adjoint",
          subspace_gap(ker_t, ker_plus), tol);

  // Gram matrix of the orbit form on the base basis.
  MatrixXd gram(r.nb, r.nb);
  for (int i = 0; i < r.nb; ++i)
    for (int j = 0; j < r.nb; ++j)
      gram(i, j) = orbit_two_form(r, ad_h_inv, VectorXd::Unit(r.nb, i),
                                  VectorXd::Unit(r.nb, j));

  // Push both kernels to tangent coordinates through the orbit map.
  MatrixXd embed_g(2 * r.nb, r.nb);
  for (int j = 0; j < r.nb; ++j)
    embed_g.col(j) = r.embed_base(VectorXd::Unit(r.nb, j));
  const MatrixXd push =
      r.alg.sym.p.basis.transpose() * r.proj_p * ad_h_inv * embed_g;

  // Stabilizer directions map to numerically zero tangent vectors; the rank
  // cut against the scale of the pushforward removes them on both sides.
  const double push_scale = push.norm();
  const Subspace k1{orthonormal_range(push * null_space(gram), kRankRelTol,
                                      push_scale)};
  const Subspace k2{orthonormal_range(push * ker_t.basis, kRankRelTol,
                                      push_scale)};
  rep.add("degeneracy_kernels_match", subspace_gap(k1, k2), tol);
  rep.metadata["kernel_tau_dim"] = static_cast<double>(ker_t.dim());
  rep.metadata["orbit_kernel_dim"] = static_cast<double>(k1.dim());

  // ker(1 - Ad_{k^2}) on g splits as ker(1 - Ad_k) + ker(1 + Ad_k).
  const MatrixXd ad_k2 = adjoint_of(r, group_mul(r, k, k));
  const Subspace ker_minus = adjoint_kernel_on_g(r, ad_k, -1.0);
  const Subspace ker_sq = adjoint_kernel_on_g(r, ad_k2, -1.0);
  MatrixXd joined(r.nb, ker_minus.dim() + ker_plus.dim());
  joined << ker_minus.basis, ker_plus.basis;
  rep.add("adjoint_kernel_splits",
          subspace_gap(ker_sq, Subspace::from_span(joined)), tol);
  return rep;
}

/// Pullback comparison against the classical forms on the target of the
/// quotient map h -> h sigma(h)^-1. The compact and noncompact targets carry
/// their usual normalizations, which come out at exactly twice the forms
/// induced here; the euclidean comparison is an exact pairing identity.
inline ResidualReport cross_check_canonical(const GroupRealization& r,
                                            int points, int frames,
                                            std::uint64_t seed,
                                            double tol = kFormsTol) {
  ResidualReport rep;
  Rng rng(seed);

  switch (r.model) {
    case ModelCase::Euclidean: {
      double tau_res = 0, ups_res = 0;
      for (int t = 0; t < points; ++t) {
        const GroupPoint pt = sample_point(r, rng);
        const MatrixXd ad_h = adjoint_of(r, pt);
        const MatrixXd coad =
            base_adjoint(r, pt.u1).inverse().transpose();
        for (int f = 0; f < frames; ++f) {
          const VectorXd xi = detail::random_base_vector(r, rng);
          const VectorXd z1 = detail::random_frame_vector(r, rng);
          const VectorXd z2 = detail::random_frame_vector(r, rng);
          const VectorXd z3 = detail::random_frame_vector(r, rng);
          // The quotient lands in the dual orbit; its velocity is the
          // coadjoint transport of the dual frame component.
          const VectorXd dj = coad * z1.tail(r.nb);
          tau_res = std::max(
              tau_res, std::abs(dj.dot(xi) - beta_eval(r, ad_h, xi, z1)));
          ups_res = std::max(ups_res,
                             std::abs(upsilon_eval(r, z1, z2, z3)));
        }
      }
      rep.add("quotient_tau_pairing", tau_res, tol);
      rep.add("quotient_upsilon_vanishes", ups_res, tol);
      break;
    }
    case ModelCase::Compact: {
      // Target G with 2-sided quotient map (g1, g2) -> g1 g2^-1; classical
      // normalizations tau = B(theta + theta-bar, .)/2 and
      // Upsilon = B(theta, [theta, theta])/12.
      const MatrixXd b_form = 2.0 * r.alg.lambda.topLeftCorner(r.nb, r.nb);
      double tau_res = 0, ups_res = 0;
      for (int t = 0; t < points; ++t) {
        const GroupPoint pt = sample_point(r, rng);
        const MatrixXd ad_h = adjoint_of(r, pt);
        const MatrixXd ad1 = base_adjoint(r, pt.u1);
        const MatrixXd ad2 = base_adjoint(r, pt.u2);
        for (int f = 0; f < frames; ++f) {
          const VectorXd xi = detail::random_base_vector(r, rng);
          VectorXd z[3];
          VectorXd theta[3], theta_bar[3];
          for (int i = 0; i < 3; ++i) {
            z[i] = detail::random_frame_vector(r, rng);
            const VectorXd delta = z[i].head(r.nb) - z[i].tail(r.nb);
            theta[i] = ad2 * delta;
            theta_bar[i] = ad1 * delta;
          }
          const double tau_canon =
              0.5 * (theta[0] + theta_bar[0]).dot(b_form * xi);
          tau_res = std::max(
              tau_res,
              std::abs(tau_canon - 2.0 * beta_eval(r, ad_h, xi, z[0])));
          const double ups_canon =
              0.5 *
              theta[0].dot(b_form * r.base.bracket(theta[1], theta[2]));
          ups_res = std::max(
              ups_res, std::abs(ups_canon -
                                2.0 * upsilon_eval(r, z[0], z[1], z[2])));
        }
      }
      rep.add("quotient_tau_canonical", tau_res, tol);
      rep.add("quotient_upsilon_canonical", ups_res, tol);
      break;
    }
    case ModelCase::Noncompact: {
      // Target is the space of positive elements u with sigma(u) = u^-1;
      // the quotient is h -> h h^dagger, and the classical forms use the
      // complex-bilinear extension of the inner form.
      const MatrixXd b_form = r.alg.lambda.topRightCorner(r.nb, r.nb);
      double member = 0, tau_res = 0, tau_imag = 0, ups_res = 0;
      double ad_pos_margin = 1e300, ad_imag = 0;
      double kernel_dim = 0;
      for (int t = 0; t < points; ++t) {
        const GroupPoint pt = sample_point(r, rng);
        const MatrixXd ad_h = adjoint_of(r, pt);
        const MatrixXd ad_sigma_h = adjoint_of(r, group_sigma(r, pt));
        const MatrixXcd quot = pt.u1 * pt.u1.adjoint();
        member = std::max(
            member,
            (quot.adjoint().inverse() - quot.inverse()).cwiseAbs().maxCoeff());

        GroupPoint qp;
        qp.u1 = quot;
        const MatrixXd ad_q = adjoint_of(r, qp);
        const Eigen::EigenSolver<MatrixXd> es(ad_q);
        ad_pos_margin =
            std::min(ad_pos_margin, es.eigenvalues().real().minCoeff());
        ad_imag = std::max(
            ad_imag, es.eigenvalues().imag().cwiseAbs().maxCoeff());
        kernel_dim = std::max(
            kernel_dim, static_cast<double>(kernel_tau(r, ad_h).dim()));

        for (int f = 0; f < frames; ++f) {
          const VectorXd xi = detail::random_base_vector(r, rng);
          VectorXd z[3];
          VectorXd wr[3], wi[3];  // theta-bar(dj) = 2 Ad_h (pi zeta)
          for (int i = 0; i < 3; ++i) {
            z[i] = detail::random_frame_vector(r, rng);
            const VectorXd v = 2.0 * (ad_h * (r.proj_p * z[i]));
            wr[i] = v.head(r.nb);
            wi[i] = v.tail(r.nb);
          }
          // theta(dj) = 2 Ad_{sigma(h)} (pi zeta), computed on its own path;
          // tau = B_c(theta + theta-bar, xi) / (2i) must be real, so the
          // real part of the sum's pairing has to cancel.
          const VectorXd u = 2.0 * (ad_sigma_h * (r.proj_p * z[0]));
          const double re_sum = (u.head(r.nb) + wr[0]).dot(b_form * xi);
          const double tau_canon =
              0.5 * (u.tail(r.nb) + wi[0]).dot(b_form * xi);
          tau_imag = std::max(tau_imag, 0.5 * std::abs(re_sum));
          tau_res = std::max(
              tau_res,
              std::abs(tau_canon - 2.0 * beta_eval(r, ad_h, xi, z[0])));

          // Upsilon = Im B_c(theta-bar, [theta-bar, theta-bar]) / 2 with the
          // complexified bracket expanded into real and imaginary parts.
          const VectorXd br_r = r.base.bracket(wr[1], wr[2]) -
                                r.base.bracket(wi[1], wi[2]);
          const VectorXd br_i = r.base.bracket(wr[1], wi[2]) +
                                r.base.bracket(wi[1], wr[2]);
          const double im_part =
              wr[0].dot(b_form * br_i) + wi[0].dot(b_form * br_r);
          ups_res = std::max(
              ups_res, std::abs(0.5 * im_part -
                                2.0 * upsilon_eval(r, z[0], z[1], z[2])));
        }
      }
      rep.add("quotient_membership", member, tol);
      rep.add("quotient_tau_canonical", tau_res, tol);
      rep.add("quotient_tau_real_part_vanishes", tau_imag, tol);
      rep.add("quotient_upsilon_canonical", ups_res, tol);
      rep.add_margin("quotient_adjoint_positive", ad_pos_margin, 1e-6, tol);
      rep.add("quotient_adjoint_spectrum_real", ad_imag, tol);
      rep.add("quotient_kernel_trivial", kernel_dim, 0.5);
      break;
    }
  }
  return rep;
}

struct VerifyFormsOptions {
  int points = 100;
  int frames = 10;
  std::uint64_t seed = 20260814;
  double tol = kFormsTol;
  int degeneracy_points = 20;
};

/// Runs every group-level verification for one realization and merges the
/// results into a single report.
inline ResidualReport run_verify_forms(ModelCase model,
                                       const std::string& base_name,
                                       const VerifyFormsOptions& opt = {}) {
  const GroupRealization r = make_realization(model, base_name);
  ResidualReport rep;
  rep.metadata["points"] = opt.points;
  rep.metadata["frames"] = opt.frames;
  rep.metadata["seed"] = static_cast<double>(opt.seed);

  rep.merge("realization_",
            check_realization(r, std::min(opt.points, 25), opt.seed + 1,
                              opt.tol));
  rep.merge("tau_",
            check_prop_tau(r, opt.points, opt.frames, opt.seed + 2, opt.tol));
  rep.merge("xi_",
            check_prop_xi(r, opt.points, opt.frames, opt.seed + 3, opt.tol));
  rep.merge("orbit_", check_orbit_form(r, opt.points, opt.frames,
                                       opt.seed + 4, opt.tol));
  // cross_check_canonical already names its checks quotient_*.
  rep.merge("", cross_check_canonical(r, opt.points, opt.frames, opt.seed + 5,
                                      opt.tol));

  // Degeneracy checks over sampled points plus the identity coset; residuals
  // are aggregated as worst cases so the report stays one line per check.
  Rng rng(opt.seed + 6);
  std::vector<GroupPoint> pts;
  pts.push_back(group_identity(r));
  for (int i = 1; i < opt.degeneracy_points; ++i)
    pts.push_back(sample_point(r, rng));
  const bool special = model == ModelCase::Compact && base_name == "su2";
  if (special) {
    GroupPoint sp = group_identity(r);
    sp.u1(0, 0) = Complex(0, 1);
    sp.u1(1, 1) = Complex(0, -1);
    pts.push_back(sp);
  }
  double kern_vs_ad = 0, kernels_match = 0, split_res = 0;
  double special_dim = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const ResidualReport one = check_min_degeneracy(r, pts[i], opt.tol);
    kern_vs_ad = std::max(kern_vs_ad,
                          one.find("kernel_tau_vs_adjoint")->max_residual);
    kernels_match = std::max(
        kernels_match, one.find("degeneracy_kernels_match")->max_residual);
    split_res = std::max(split_res,
                         one.find("adjoint_kernel_splits")->max_residual);
    if (special && i + 1 == pts.size())
      special_dim = one.metadata.at("kernel_tau_dim");
  }
  rep.add("degeneracy_kernel_tau_vs_adjoint", kern_vs_ad, opt.tol);
  rep.add("degeneracy_kernels_match", kernels_match, opt.tol);
  rep.add("degeneracy_adjoint_kernel_splits", split_res, opt.tol);
  if (special) {
    rep.metadata["special_point_kernel_dim"] = special_dim;
    rep.add("degeneracy_special_point_dim", std::abs(special_dim - 2.0),
            0.5);
  }
  return rep;
}

} // namespace legsym
