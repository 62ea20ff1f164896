#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <string>

#include "legsym/catalog.hpp"
#include "legsym/json_io.hpp"

using namespace legsym;

TEST_CASE("canonical dump sorts keys and formats scalars stably") {
  Json j;
  j["beta"] = 1;
  j["alpha"] = Json::array({0.5, true, "x"});
  REQUIRE(canonical_dump(j) == "{\"alpha\":[0.5,true,\"x\"],\"beta\":1}\n");
  REQUIRE(canonical_dump(Json(1.0)) == "1\n");
  REQUIRE(canonical_dump(Json(-0.1)) ==
          "-0.10000000000000001\n");

  REQUIRE_THROWS_AS(
      canonical_dump(Json(std::numeric_limits<double>::infinity())),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      canonical_dump(Json(std::numeric_limits<double>::quiet_NaN())),
      std::invalid_argument);
}

TEST_CASE("su(3) roundtrips through text bytes unchanged") {
  const LieAlgebra l = make_su3();
  const std::string bytes = canonical_dump(algebra_to_json(l));
  const LieAlgebra back = algebra_from_json(Json::parse(bytes));

  REQUIRE(back.dim() == 8);
  for (int i = 0; i < 8; ++i)
    REQUIRE(max_abs(back.ad_basis(i) - l.ad_basis(i)) == 0.0);
  // A second trip through text produces identical bytes.
  REQUIRE(canonical_dump(algebra_to_json(back)) == bytes);
}

TEST_CASE("hand-written bracket records build su(2)") {
  const Json j = {
      {"dim", 3},
      {"brackets",
       {{{"i", 0}, {"j", 1}, {"coeffs", {{"2", 1.0}}}},
        {{"i", 0}, {"j", 2}, {"coeffs", {{"1", -1.0}}}},
        {{"i", 1}, {"j", 2}, {"coeffs", {{"0", 1.0}}}}}}};
  const LieAlgebra l = algebra_from_json(j);
  const LieAlgebra ref = make_su2();
  for (int i = 0; i < 3; ++i)
    REQUIRE(max_abs(l.ad_basis(i) - ref.ad_basis(i)) == 0.0);
}

TEST_CASE("malformed bracket records are rejected") {
  Json j = {{"dim", 2}, {"brackets", Json::array()}};

  j["brackets"] = {{{"i", 1}, {"j", 0}, {"coeffs", {{"0", 1.0}}}}};
  REQUIRE_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("i < j"));

  j["brackets"] = {{{"i", 0}, {"j", 5}, {"coeffs", {{"0", 1.0}}}}};
  REQUIRE_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("out of range"));

  j["brackets"] = {{{"i", 0}, {"j", 1}, {"coeffs", {{"7", 1.0}}}}};
  REQUIRE_THROWS_WITH(
      algebra_from_json(j),
      Catch::Matchers::ContainsSubstring("coefficient index out of range"));

  j = {{"dim", 0}, {"brackets", Json::array()}};
  REQUIRE_THROWS_AS(algebra_from_json(j), std::invalid_argument);
}

TEST_CASE("legendrian structures roundtrip with the stored inner product") {
  const MatrixXd inner = 4.0 * MatrixXd::Identity(3, 3);
  const LegendrianSymmetricAlgebra l = build_compact(make_su2(), inner);
  const std::string bytes = canonical_dump(legendrian_to_json(l));

  const LegendrianSymmetricAlgebra back =
      legendrian_from_json(Json::parse(bytes));
  REQUIRE(max_abs(back.lambda - l.lambda) == 0.0);
  REQUIRE(max_abs(back.sym.s - l.sym.s) == 0.0);
  REQUIRE(back.inner.has_value());
  REQUIRE(max_abs(*back.inner - inner) == 0.0);
  REQUIRE(validate_legendrian(back).all_pass());

  // Without a stored inner product the field stays absent.
  const Json none = legendrian_to_json(
      LegendrianSymmetricAlgebra{l.sym, l.lambda, {}});
  REQUIRE_FALSE(none.contains("inner"));
}

TEST_CASE("reports serialize with per-check verdicts") {
  ResidualReport rep;
  rep.add("tight", 1e-12, 1e-9);
  rep.add("loose", 0.5, 1e-9);
  rep.metadata["note"] = 2.0;

  const Json j = report_to_json(rep);
  REQUIRE(j["all_pass"] == false);
  REQUIRE(j["checks"].size() == 2);
  REQUIRE(j["checks"][0]["name"] == "tight");
  REQUIRE(j["checks"][0]["pass"] == true);
  REQUIRE(j["checks"][1]["pass"] == false);
  REQUIRE(j["metadata"]["note"] == 2.0);
}

TEST_CASE("decomposition results serialize the component summary") {
  const DecompositionResult res = decompose(build_compact(make_su2()));
  const Json j = decomposition_to_json(res);
  REQUIRE(j["components"].size() == 1);
  REQUIRE(j["components"][0]["type"] == "+");
  REQUIRE(j["components"][0]["g_dim"] == 3);
  REQUIRE(j["components"][0]["h_dim"] == 6);
  REQUIRE(j["components"][0]["iso_residual"].get<double>() < 1e-10);
  REQUIRE(j["rescale_factors"].size() == 1);
  REQUIRE(j["rescale_factors"][0].get<double>() == 0.5);
  REQUIRE(j["cluster_eigenvalues"].size() == 1);
  REQUIRE(j["rescaled_lambda"].size() == 36);
  REQUIRE(j["report"]["all_pass"] == true);

  REQUIRE(canonical_dump(j) ==
          canonical_dump(decomposition_to_json(decompose(
              build_compact(make_su2())))));
}

TEST_CASE("file helpers write and parse JSON") {
  const std::string path = "/tmp/legsym_test_io.json";
  write_text_file(path, "{\"k\": [1, 2]}\n");
  const Json j = read_json_file(path);
  REQUIRE(j["k"].size() == 2);
  REQUIRE(j["k"][1] == 2);
  REQUIRE_THROWS_AS(read_json_file("/tmp/legsym_does_not_exist.json"),
                    std::runtime_error);
}
