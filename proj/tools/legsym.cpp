#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legsym/legsym.hpp"

using namespace legsym;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

LieAlgebra load_algebra(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_algebra(spec.substr(8));
  return algebra_from_json(read_json_file(spec));
}

LegendrianSymmetricAlgebra build_model(const std::string& type,
                                       const LieAlgebra& g) {
  if (type == "euclidean") return build_euclidean(g);
  if (type == "compact") return build_compact(g);
  if (type == "noncompact") return build_noncompact(g);
  throw std::invalid_argument("unknown model type: " + type);
}

void emit(const Json& j, const std::string& report_path) {
  const std::string text = canonical_dump(j);
  std::cout << text;
  if (!report_path.empty()) write_text_file(report_path, text);
}

struct CommonOpts {
  std::string report_path;
  double tol = kDefaultTol;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--report", c.report_path, "write the JSON output here too");
  cmd->add_option("--tol", c.tol, "residual tolerance");
}

int run(int argc, char** argv) {
  CLI::App app{"Legendrian symmetric Lie algebras: construction, axiom "
               "verification, canonical decomposition, group-level forms"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand(
      "check-algebra", "antisymmetry and Jacobi residuals of an algebra");
  std::string check_g = "builtin:su2";
  CommonOpts check_c;
  check->add_option("--g", check_g, "builtin:<name> or a JSON file");
  add_common(check, check_c);

  auto* build = app.add_subcommand(
      "build", "construct a canonical model over a compact algebra");
  std::string build_type = "compact", build_g = "builtin:su2";
  std::string build_output;
  CommonOpts build_c;
  build->add_option("--type", build_type,
                    "euclidean, compact, or noncompact");
  build->add_option("--g", build_g, "builtin:<name> or a JSON file");
  build->add_option("--output", build_output, "write the model JSON here");
  add_common(build, build_c);

  auto* validate = app.add_subcommand(
      "validate-legendrian", "verify every structure axiom of a model file");
  std::string validate_input;
  CommonOpts validate_c;
  validate->add_option("--input", validate_input, "model JSON file")
      ->required();
  add_common(validate, validate_c);

  auto* dec = app.add_subcommand(
      "decompose", "canonical decomposition with certified isomorphisms");
  std::string dec_input, dec_build;
  std::uint64_t dec_scramble = 0;
  bool dec_has_scramble = false;
  CommonOpts dec_c;
  dec->add_option("--input", dec_input, "model JSON file");
  dec->add_option("--build", dec_build,
                  "construct the input as <type>:<base>, e.g. compact:su2");
  dec->add_option("--scramble", dec_scramble,
                  "conjugate the input by a seeded random basis change")
      ->each([&](const std::string&) { dec_has_scramble = true; });
  add_common(dec, dec_c);

  auto* forms = app.add_subcommand(
      "verify-forms", "group-level form identities on a matrix realization");
  std::string forms_case = "compact", forms_g = "su2";
  VerifyFormsOptions forms_opt;
  forms_opt.tol = kFormsTol;
  CommonOpts forms_c;
  forms_c.tol = kFormsTol;
  forms->add_option("--case", forms_case,
                    "euclidean, compact, or noncompact");
  forms->add_option("--g", forms_g, "base algebra: su2 or su3");
  forms->add_option("--samples", forms_opt.points, "group points to sample");
  forms->add_option("--frames", forms_opt.frames, "frame vectors per point");
  forms->add_option("--seed", forms_opt.seed, "sampling seed");
  add_common(forms, forms_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitBadInput;
  }

  if (check->parsed()) {
    const LieAlgebra g = load_algebra(check_g);
    ResidualReport rep;
    rep.add("antisymmetry", g.antisymmetry_residual(), check_c.tol);
    rep.add("jacobi", jacobi_residual(g), check_c.tol);
    rep.metadata["dim"] = g.dim();
    Json out = report_to_json(rep);
    out["algebra"] = check_g;
    emit(out, check_c.report_path);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
  }

  if (build->parsed()) {
    const LieAlgebra g = load_algebra(build_g);
    const LegendrianSymmetricAlgebra l = build_model(build_type, g);
    const ResidualReport rep = validate_legendrian(l, build_c.tol);
    const Json j = legendrian_to_json(l);
    if (!build_output.empty()) write_text_file(build_output, canonical_dump(j));
    Json out = report_to_json(rep);
    out["type"] = build_type;
    out["dim"] = l.dim();
    if (build_output.empty()) out["model"] = j;
    emit(out, build_c.report_path);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
  }

  if (validate->parsed()) {
    const LegendrianSymmetricAlgebra l =
        legendrian_from_json(read_json_file(validate_input), validate_c.tol);
    ResidualReport rep = validate_legendrian(l, validate_c.tol);
    rep.merge("sym_", check_bracket_relations(l.sym, validate_c.tol));
    const auto orth = is_orthogonal(l.sym);
    const auto eff = is_effective(l.sym);
    rep.metadata["orthogonal"] = orth.ok ? 1.0 : 0.0;
    rep.metadata["effective"] = eff.ok ? 1.0 : 0.0;
    emit(report_to_json(rep), validate_c.report_path);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
  }

  if (dec->parsed()) {
    if (dec_input.empty() == dec_build.empty())
      throw std::invalid_argument(
          "decompose needs exactly one of --input or --build");
    LegendrianSymmetricAlgebra l = [&] {
      if (!dec_input.empty())
        return legendrian_from_json(read_json_file(dec_input), dec_c.tol);
      const auto colon = dec_build.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--build expects <type>:<base>");
      return build_model(dec_build.substr(0, colon),
                         builtin_algebra(dec_build.substr(colon + 1)));
    }();
    if (dec_has_scramble) l = scramble(l, dec_scramble).algebra;
    const DecompositionResult res = decompose(l, dec_c.tol);
    emit(decomposition_to_json(res), dec_c.report_path);
    return res.report.all_pass() ? kExitPass : kExitCheckFailed;
  }

  // verify-forms
  forms_opt.tol = forms_c.tol;
  const ResidualReport rep =
      run_verify_forms(parse_model_case(forms_case), forms_g, forms_opt);
  Json out = report_to_json(rep);
  out["case"] = forms_case;
  out["base"] = forms_g;
  emit(out, forms_c.report_path);
  return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
