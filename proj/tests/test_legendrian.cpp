#include <catch2/catch_amalgamated.hpp>

#include "legsym/catalog.hpp"
#include "legsym/legendrian.hpp"

using namespace legsym;

TEST_CASE("compact model over su2 has the expected form matrices") {
  const LegendrianSymmetricAlgebra l = build_compact(make_su2());
  REQUIRE(l.dim() == 6);

  // -kappa = 2 I, so lambda = diag(I, -I) after the 1/2 normalization.
  MatrixXd expect = MatrixXd::Identity(6, 6);
  expect.bottomRightCorner(3, 3) *= -1.0;
  REQUIRE(max_abs(l.lambda - expect) < 1e-14);

  // s swaps the factors.
  MatrixXd swap = MatrixXd::Zero(6, 6);
  swap.topRightCorner(3, 3) = MatrixXd::Identity(3, 3);
  swap.bottomLeftCorner(3, 3) = MatrixXd::Identity(3, 3);
  REQUIRE(max_abs(l.sym.s - swap) == 0.0);

  const ResidualReport rep = validate_legendrian(l);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.worst_residual() < 1e-14);
  REQUIRE(rep.metadata.at("nondegeneracy_margin") > 0.1);
}

TEST_CASE("noncompact model over su2 has the expected form matrices") {
  const LegendrianSymmetricAlgebra l = build_noncompact(make_su2());
  REQUIRE(l.dim() == 6);

  // lambda pairs the real and imaginary parts through B = 2 I.
  MatrixXd expect = MatrixXd::Zero(6, 6);
  expect.topRightCorner(3, 3) = 2.0 * MatrixXd::Identity(3, 3);
  expect.bottomLeftCorner(3, 3) = 2.0 * MatrixXd::Identity(3, 3);
  REQUIRE(max_abs(l.lambda - expect) < 1e-14);

  MatrixXd s = MatrixXd::Identity(6, 6);
  s.bottomRightCorner(3, 3) *= -1.0;
  REQUIRE(max_abs(l.sym.s - s) == 0.0);

  // The imaginary copies bracket back into the real part: [i e_i, i e_j]
  // = -[e_i, e_j].
  const LieAlgebra& h = l.sym.algebra;
  const VectorXd br = h.bracket(VectorXd::Unit(6, 3), VectorXd::Unit(6, 4));
  VectorXd expect_br = VectorXd::Zero(6);
  expect_br(2) = -1.0;
  REQUIRE(max_abs(br - expect_br) < 1e-14);

  REQUIRE(validate_legendrian(l).all_pass());
}

TEST_CASE("euclidean model over su2 couples g and its dual by the pairing") {
  const LegendrianSymmetricAlgebra l = build_euclidean(make_su2());
  REQUIRE(l.dim() == 6);

  MatrixXd expect = MatrixXd::Zero(6, 6);
  expect.topRightCorner(3, 3) = MatrixXd::Identity(3, 3);
  expect.bottomLeftCorner(3, 3) = MatrixXd::Identity(3, 3);
  REQUIRE(max_abs(l.lambda - expect) < 1e-14);

  // Coadjoint action: for the epsilon bracket ad is antisymmetric, so
  // ad* = ad and the mixed constants repeat the epsilon tensor.
  const LieAlgebra& h = l.sym.algebra;
  const VectorXd br = h.bracket(VectorXd::Unit(6, 0), VectorXd::Unit(6, 4));
  VectorXd expect_br = VectorXd::Zero(6);
  expect_br(5) = 1.0;  // [e1, e2*] = e3*
  REQUIRE(max_abs(br - expect_br) < 1e-14);

  // The dual part is abelian.
  REQUIRE(max_abs(h.bracket(VectorXd::Unit(6, 3), VectorXd::Unit(6, 4))) ==
          0.0);

  REQUIRE(validate_legendrian(l).all_pass());
  REQUIRE(jacobi_residual(h) < 1e-13);
}

TEST_CASE("custom inner products rescale the forms") {
  const MatrixXd b = 4.0 * MatrixXd::Identity(3, 3);
  const LegendrianSymmetricAlgebra l = build_compact(make_su2(), b);
  REQUIRE(max_abs(l.lambda.topLeftCorner(3, 3) -
                  2.0 * MatrixXd::Identity(3, 3)) < 1e-14);
  REQUIRE(validate_legendrian(l).all_pass());

  SECTION("non-invariant inner products are rejected") {
    MatrixXd bad = MatrixXd::Identity(3, 3);
    bad(0, 0) = 2.0;  // breaks ad-invariance for the epsilon bracket
    REQUIRE_THROWS_AS(build_compact(make_su2(), bad), std::invalid_argument);
  }
  SECTION("indefinite inner products are rejected") {
    MatrixXd bad = -MatrixXd::Identity(3, 3);
    REQUIRE_THROWS_AS(build_compact(make_su2(), bad), std::invalid_argument);
  }
  SECTION("default inner product needs a compact algebra") {
    REQUIRE_THROWS_AS(build_compact(make_abelian(3)), std::invalid_argument);
  }
}

TEST_CASE("direct sums of models validate blockwise") {
  const LegendrianSymmetricAlgebra l = legendrian_direct_sum(
      build_compact(make_su2()), build_noncompact(make_su2()));
  REQUIRE(l.dim() == 12);
  REQUIRE(validate_legendrian(l).all_pass());
  REQUIRE(max_abs(l.lambda.topRightCorner(6, 6)) == 0.0);
}

TEST_CASE("scrambling transforms the form covariantly") {
  const LegendrianSymmetricAlgebra l = build_compact(make_su3());
  const ScrambleResult sc = scramble(l, 55);
  const MatrixXd& m = sc.map;
  Rng rng(56);
  for (int t = 0; t < 10; ++t) {
    VectorXd x(l.dim()), y(l.dim());
    for (int i = 0; i < l.dim(); ++i) {
      x(i) = rng.gaussian();
      y(i) = rng.gaussian();
    }
    const double before = x.dot(l.lambda * y);
    const double after = (m * x).dot(sc.algebra.lambda * (m * y));
    REQUIRE(std::abs(before - after) < 1e-10);
  }
  REQUIRE(validate_legendrian(sc.algebra).all_pass());

  SECTION("same seed reproduces the same scramble") {
    const ScrambleResult sc2 = scramble(l, 55);
    REQUIRE(max_abs(sc.map - sc2.map) == 0.0);
  }
}

TEST_CASE("axiom violations are reported with large residuals") {
  const LegendrianSymmetricAlgebra good = build_compact(make_su2());

  SECTION("asymmetric form") {
    LegendrianSymmetricAlgebra bad = good;
    bad.lambda(0, 1) += 1e-3;
    const ResidualReport rep = validate_legendrian(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE(rep.find("symmetry")->max_residual > 1e-4);
  }
  SECTION("broken s-skewness") {
    LegendrianSymmetricAlgebra bad = good;
    bad.lambda(0, 0) += 1e-3;
    bad.lambda(3, 3) += 1e-3;  // keeps lambda symmetric
    const ResidualReport rep = validate_legendrian(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE(rep.find("s_skew")->max_residual > 1e-4);
  }
  SECTION("broken ad-invariance") {
    LegendrianSymmetricAlgebra bad = good;
    bad.lambda(0, 1) += 1e-3;
    bad.lambda(1, 0) += 1e-3;
    const ResidualReport rep = validate_legendrian(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE(rep.find("ad_invariance")->max_residual > 1e-4);
  }
  SECTION("degenerate form") {
    LegendrianSymmetricAlgebra bad = good;
    bad.lambda.row(0).setZero();
    bad.lambda.col(0).setZero();
    const ResidualReport rep = validate_legendrian(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE(rep.find("nondegeneracy")->max_residual > 0.0);
  }
  SECTION("non-isotropic g") {
    LegendrianSymmetricAlgebra bad = build_euclidean(make_su2());
    bad.lambda.topLeftCorner(3, 3) += 1e-3 * MatrixXd::Identity(3, 3);
    const ResidualReport rep = validate_legendrian(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE(rep.find("g_isotropy")->max_residual > 1e-4);
  }
}
