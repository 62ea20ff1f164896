#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "legsym/group_checks.hpp"
#include "legsym/group_forms.hpp"

using namespace legsym;

namespace {

VectorXd random_vector(Rng& rng, int n) {
  VectorXd z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.gaussian();
  return z;
}

// Tangent coordinates of a curve through the identity, by central difference.
VectorXd curve_velocity(const GroupRealization& r, const GroupPoint& plus,
                        const GroupPoint& minus, double eps) {
  VectorXd out(2 * r.nb);
  const MatrixXcd du1 = (plus.u1 - minus.u1) / (2.0 * eps);
  const Eigen::VectorXcd c1 = r.matrix_coords(du1);
  out.head(r.nb) = c1.real();
  switch (r.model) {
    case ModelCase::Compact: {
      const MatrixXcd du2 = (plus.u2 - minus.u2) / (2.0 * eps);
      out.tail(r.nb) = r.matrix_coords(du2).real();
      break;
    }
    case ModelCase::Noncompact:
      out.tail(r.nb) = c1.imag();
      break;
    case ModelCase::Euclidean:
      out.tail(r.nb) = (plus.ell - minus.ell) / (2.0 * eps);
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("realization checks pass for every model over su(2)") {
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const GroupRealization r =
        make_realization(parse_model_case(name), "su2");
    const ResidualReport rep = check_realization(r, 20, 11);
    CAPTURE(rep.worst_residual());
    REQUIRE(rep.all_pass());
    REQUIRE(rep.worst_residual() < 1e-8);
  }
}

TEST_CASE("realization checks pass for the compact su(3) model") {
  const GroupRealization r = make_realization(ModelCase::Compact, "su3");
  const ResidualReport rep = check_realization(r, 8, 12);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.worst_residual() < 1e-8);
}

TEST_CASE("adjoint matrix matches the conjugation-curve derivative") {
  // Independent oracle: differentiate c(t) = a exp(t zeta) a^-1 numerically
  // and compare with adjoint_of. This exercises the translation block of the
  // euclidean adjoint, which has no other closed-form cross-check.
  const double eps = 1e-5;
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const GroupRealization r =
        make_realization(parse_model_case(name), "su2");
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
      const GroupPoint a = sample_point(r, rng);
      const MatrixXd ad = adjoint_of(r, a);
      VectorXd zeta = random_vector(rng, 2 * r.nb);
      zeta /= std::max(1.0, zeta.norm());

      auto curve = [&](double t) {
        return group_mul(r, group_mul(r, a, group_exp(r, VectorXd(t * zeta))),
                         group_inv(r, a));
      };
      const VectorXd numeric = curve_velocity(r, curve(eps), curve(-eps), eps);
      REQUIRE(max_abs(numeric - ad * zeta) < 1e-6);
    }
  }
}

TEST_CASE("beta at the identity reduces to a frozen pairing") {
  Rng rng(5);
  const VectorXd xi = random_vector(rng, 3);
  const VectorXd zeta = random_vector(rng, 6);
  const VectorXd head = zeta.head(3);
  const VectorXd tail = zeta.tail(3);

  // Compact: Lambda = diag(I, -I), pi zeta = (delta, -delta)/2.
  const GroupRealization rc = make_realization(ModelCase::Compact, "su2");
  const MatrixXd id6 = MatrixXd::Identity(6, 6);
  REQUIRE(std::abs(beta_eval(rc, id6, xi, zeta) - xi.dot(head - tail)) <
          1e-14);

  // Noncompact: Lambda pairs the blocks through B = 2I.
  const GroupRealization rn = make_realization(ModelCase::Noncompact, "su2");
  REQUIRE(std::abs(beta_eval(rn, id6, xi, zeta) - 2.0 * xi.dot(tail)) < 1e-14);

  // Euclidean: plain dual pairing with the translation component.
  const GroupRealization re = make_realization(ModelCase::Euclidean, "su2");
  REQUIRE(std::abs(beta_eval(re, id6, xi, zeta) - xi.dot(tail)) < 1e-14);
}

TEST_CASE("form identities hold at sampled points for all models") {
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const GroupRealization r =
        make_realization(parse_model_case(name), "su2");
    const ResidualReport tau = check_prop_tau(r, 15, 4, 21);
    CAPTURE(tau.worst_residual());
    REQUIRE(tau.all_pass());
    const ResidualReport xi = check_prop_xi(r, 15, 4, 22);
    CAPTURE(xi.worst_residual());
    REQUIRE(xi.all_pass());
    const ResidualReport orbit = check_orbit_form(r, 15, 4, 23);
    REQUIRE(orbit.all_pass());
  }
}

TEST_CASE("form identities hold on the compact su(3) model") {
  const GroupRealization r = make_realization(ModelCase::Compact, "su3");
  REQUIRE(check_prop_tau(r, 6, 3, 31).all_pass());
  REQUIRE(check_prop_xi(r, 6, 3, 32).all_pass());
  REQUIRE(check_orbit_form(r, 6, 3, 33).all_pass());
}

TEST_CASE("tau is nondegenerate at the identity coset") {
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const GroupRealization r =
        make_realization(parse_model_case(name), "su2");
    const MatrixXd ad_e = adjoint_of(r, group_identity(r));
    REQUIRE(max_abs(ad_e - MatrixXd::Identity(6, 6)) < 1e-12);
    REQUIRE(kernel_tau(r, ad_e).dim() == 0);
  }
}

TEST_CASE("compact su(2) has a two-dimensional kernel at the special point") {
  const GroupRealization r = make_realization(ModelCase::Compact, "su2");
  GroupPoint sp = group_identity(r);
  sp.u1(0, 0) = Complex(0, 1);
  sp.u1(1, 1) = Complex(0, -1);

  const Subspace ker = kernel_tau(r, adjoint_of(r, sp));
  REQUIRE(ker.dim() == 2);
  // Conjugation by diag(i, -i) flips the first two su(2) directions, so
  // 1 + Ad_k annihilates exactly their span.
  REQUIRE(ker.containment_residual(VectorXd::Unit(3, 0)) < 1e-8);
  REQUIRE(ker.containment_residual(VectorXd::Unit(3, 1)) < 1e-8);

  const ResidualReport rep = check_min_degeneracy(r, sp);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.metadata.at("kernel_tau_dim") == 2.0);
}

TEST_CASE("degeneracy loci agree between tau and the orbit form") {
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const GroupRealization r =
        make_realization(parse_model_case(name), "su2");
    Rng rng(41);
    std::vector<GroupPoint> pts;
    pts.push_back(group_identity(r));
    for (int i = 0; i < 6; ++i) pts.push_back(sample_point(r, rng));
    for (size_t i = 0; i < pts.size(); ++i) {
      INFO("point " << i);
      const ResidualReport rep = check_min_degeneracy(r, pts[i]);
      CAPTURE(rep.worst_residual());
      REQUIRE(rep.all_pass());
    }
  }
}

TEST_CASE("euclidean quotient comparison is exact") {
  const GroupRealization r = make_realization(ModelCase::Euclidean, "su2");
  const ResidualReport rep = cross_check_canonical(r, 10, 4, 51);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.worst_residual() < 1e-12);
}

TEST_CASE("compact quotient reproduces the doubled classical forms") {
  const GroupRealization r = make_realization(ModelCase::Compact, "su2");
  const ResidualReport rep = cross_check_canonical(r, 10, 4, 52);
  CAPTURE(rep.worst_residual());
  REQUIRE(rep.all_pass());
  REQUIRE(rep.worst_residual() < 1e-8);
}

TEST_CASE("noncompact quotient has positive spectrum and trivial kernel") {
  const GroupRealization r = make_realization(ModelCase::Noncompact, "su2");
  const ResidualReport rep = cross_check_canonical(r, 10, 4, 53);
  CAPTURE(rep.worst_residual());
  REQUIRE(rep.all_pass());
  REQUIRE(rep.find("quotient_kernel_trivial")->max_residual == 0.0);
  REQUIRE(rep.find("quotient_adjoint_positive")->pass);
}

TEST_CASE("sampling and aggregate verification are deterministic") {
  const GroupRealization r = make_realization(ModelCase::Compact, "su2");
  REQUIRE(point_distance(r, sample_point(r, 77), sample_point(r, 77)) == 0.0);

  VerifyFormsOptions opt;
  opt.points = 5;
  opt.frames = 2;
  opt.degeneracy_points = 3;
  const ResidualReport a = run_verify_forms(ModelCase::Compact, "su2", opt);
  const ResidualReport b = run_verify_forms(ModelCase::Compact, "su2", opt);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    REQUIRE(a.checks[i].name == b.checks[i].name);
    REQUIRE(a.checks[i].max_residual == b.checks[i].max_residual);
  }
}

TEST_CASE("aggregate verification passes for the three su(2) models") {
  VerifyFormsOptions opt;
  opt.points = 12;
  opt.frames = 4;
  opt.degeneracy_points = 5;
  for (const std::string name : {"euclidean", "compact", "noncompact"}) {
    INFO(name);
    const ResidualReport rep =
        run_verify_forms(parse_model_case(name), "su2", opt);
    CAPTURE(rep.worst_residual());
    REQUIRE(rep.all_pass());
    if (name == "compact")
      REQUIRE(rep.metadata.at("special_point_kernel_dim") == 2.0);
  }
}
