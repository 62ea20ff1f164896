#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "legsym/json_io.hpp"

#ifndef LEGSYM_CLI_PATH
#error "LEGSYM_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LEGSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

}  // namespace

TEST_CASE("check-algebra reports clean residuals for builtins") {
  const CliResult r = run_cli("check-algebra --g builtin:su3");
  REQUIRE(r.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(r.out);
  REQUIRE(j["all_pass"] == true);
  REQUIRE(j["metadata"]["dim"] == 8.0);
  REQUIRE(j["algebra"] == "builtin:su3");
}

TEST_CASE("build then validate-legendrian round trips through a file") {
  const std::string model = "/tmp/legsym_cli_model.json";
  const CliResult built =
      run_cli("build --type noncompact --g builtin:su2 --output " + model);
  REQUIRE(built.exit_code == 0);

  const CliResult val = run_cli("validate-legendrian --input " + model);
  REQUIRE(val.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(val.out);
  REQUIRE(j["all_pass"] == true);
  REQUIRE(j["metadata"]["orthogonal"] == 1.0);
  REQUIRE(j["metadata"]["effective"] == 1.0);
}

TEST_CASE("build without output embeds the model in the report") {
  const CliResult r = run_cli("build --type compact --g builtin:su2");
  REQUIRE(r.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(r.out);
  REQUIRE(j["dim"] == 6);
  REQUIRE(j["model"]["lambda"].size() == 36);
}

TEST_CASE("decompose identifies the built model type") {
  const CliResult r = run_cli("decompose --build compact:su2");
  REQUIRE(r.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(r.out);
  REQUIRE(j["components"].size() == 1);
  REQUIRE(j["components"][0]["type"] == "+");
  REQUIRE(j["components"][0]["g_dim"] == 3);
  REQUIRE(j["rescale_factors"][0] == 0.5);
  REQUIRE(j["report"]["all_pass"] == true);
}

TEST_CASE("decompose sees through a scrambled basis") {
  const CliResult r = run_cli("decompose --build noncompact:su2 --scramble 3");
  REQUIRE(r.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(r.out);
  REQUIRE(j["components"].size() == 1);
  REQUIRE(j["components"][0]["type"] == "-");
  REQUIRE(j["components"][0]["iso_residual"].get<double>() < 1e-8);
}

TEST_CASE("verify-forms runs a small sample to completion") {
  const CliResult r =
      run_cli("verify-forms --case euclidean --g su2 --samples 4 --frames 2");
  REQUIRE(r.exit_code == 0);
  const legsym::Json j = legsym::Json::parse(r.out);
  REQUIRE(j["case"] == "euclidean");
  REQUIRE(j["all_pass"] == true);
}

TEST_CASE("bad inputs exit with code two") {
  REQUIRE(run_cli("validate-legendrian --input /tmp/legsym_missing.json")
              .exit_code == 2);
  REQUIRE(run_cli("decompose --build compact:sp4").exit_code == 2);
  REQUIRE(run_cli("decompose").exit_code == 2);
  REQUIRE(run_cli("no-such-command").exit_code == 2);
  // Euclidean over an abelian base is not effective: a hypothesis failure.
  REQUIRE(run_cli("decompose --build euclidean:r2").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const CliResult a = run_cli("decompose --build compact:su3");
  const CliResult b = run_cli("decompose --build compact:su3");
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE_FALSE(a.out.empty());
}

TEST_CASE("the report flag mirrors stdout into a file") {
  const std::string path = "/tmp/legsym_cli_report.json";
  const CliResult r =
      run_cli("decompose --build compact:su2 --report " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  REQUIRE(ss.str() == r.out);
}
