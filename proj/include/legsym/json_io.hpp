#pragma once

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "legsym/decomposition.hpp"
#include "legsym/legendrian.hpp"
#include "legsym/report.hpp"

namespace legsym {

using Json = nlohmann::json;

// ---- canonical serialization ----

namespace detail {

inline void canonical_dump_impl(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        canonical_dump_impl(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        canonical_dump_impl(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::string:
      out += j.dump();
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v))
        throw std::invalid_argument("cannot serialize non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      break;
    }
    case Json::value_t::null:
      out += "null";
      break;
    default:
      throw std::invalid_argument("unsupported JSON value type");
  }
}

} // namespace detail

/// Deterministic text form: keys sorted, doubles printed with %.17g, no
/// whitespace. Equal values serialize to identical bytes on any platform.
inline std::string canonical_dump(const Json& j) {
  std::string out;
  detail::canonical_dump_impl(j, out);
  out += '\n';
  return out;
}

// ---- matrices ----

inline Json matrix_to_json(const MatrixXd& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

inline MatrixXd matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  MatrixXd m(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = j[idx++].get<double>();
  return m;
}

// ---- Lie algebras ----

/// Structure constants are stored sparsely as records {i, j, coeffs} with
/// 0-based indices and i < j; the j > i half follows by antisymmetry.
inline Json algebra_to_json(const LieAlgebra& l) {
  Json out;
  out["dim"] = l.dim();
  out["labels"] = l.labels();
  Json brackets = Json::array();
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j) {
      Json coeffs = Json::object();
      for (int k = 0; k < l.dim(); ++k) {
        const double v = l.structure()[k](i, j);
        if (v != 0.0) coeffs[std::to_string(k)] = v;
      }
      if (!coeffs.empty())
        brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  out["brackets"] = brackets;
  return out;
}

inline LieAlgebra algebra_from_json(const Json& j) {
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw std::invalid_argument("dim must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("label count does not match dim");
  } else {
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::vector<MatrixXd> c(n, MatrixXd::Zero(n, n));
  for (const auto& rec : j.at("brackets")) {
    const int i = rec.at("i").get<int>();
    const int jj = rec.at("j").get<int>();
    if (i < 0 || jj < 0 || i >= n || jj >= n)
      throw std::invalid_argument("bracket index out of range");
    if (i >= jj)
      throw std::invalid_argument(
          "bracket records must have i < j (0-based indices)");
    for (const auto& [key, val] : rec.at("coeffs").items()) {
      const int k = std::stoi(key);
      if (k < 0 || k >= n)
        throw std::invalid_argument("coefficient index out of range");
      const double v = val.get<double>();
      c[k](i, jj) = v;
      c[k](jj, i) = -v;
    }
  }
  return LieAlgebra::from_structure(std::move(c), std::move(labels));
}

// ---- symmetric and Legendrian structures ----

inline Json symmetric_to_json(const SymmetricLieAlgebra& sym) {
  Json out = algebra_to_json(sym.algebra);
  out["involution"] = matrix_to_json(sym.s);
  return out;
}

inline SymmetricLieAlgebra symmetric_from_json(const Json& j,
                                               double tol = kDefaultTol) {
  LieAlgebra l = algebra_from_json(j);
  const int n = l.dim();
  MatrixXd s = matrix_from_json(j.at("involution"), n, n);
  return SymmetricLieAlgebra::make(std::move(l), std::move(s), tol);
}

inline Json legendrian_to_json(const LegendrianSymmetricAlgebra& l) {
  Json out = symmetric_to_json(l.sym);
  out["lambda"] = matrix_to_json(l.lambda);
  if (l.inner) out["inner"] = matrix_to_json(*l.inner);
  return out;
}

inline LegendrianSymmetricAlgebra legendrian_from_json(
    const Json& j, double tol = kDefaultTol) {
  SymmetricLieAlgebra sym = symmetric_from_json(j, tol);
  const int n = sym.algebra.dim();
  MatrixXd lam = matrix_from_json(j.at("lambda"), n, n);
  std::optional<MatrixXd> inner;
  if (j.contains("inner")) {
    const int half = n / 2;
    inner = matrix_from_json(j.at("inner"), half, half);
  }
  return {std::move(sym), std::move(lam), std::move(inner)};
}

// ---- reports and decomposition results ----

inline Json report_to_json(const ResidualReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"pass", c.pass}});
  Json meta = Json::object();
  for (const auto& [k, v] : rep.metadata) meta[k] = v;
  return {{"checks", checks},
          {"metadata", meta},
          {"all_pass", rep.all_pass()}};
}

inline Json decomposition_to_json(const DecompositionResult& res) {
  Json comps = Json::array();
  for (const auto& c : res.components)
    comps.push_back({{"type", component_tag(c.type)},
                     {"g_dim", c.g_dim},
                     {"h_dim", c.h_part.dim()},
                     {"iso_residual", c.iso_residual}});
  Json factors = Json::array();
  for (double f : res.rescale_factors) factors.push_back(f);
  Json eigs = Json::array();
  for (double e : res.cluster_eigenvalues) eigs.push_back(e);
  return {{"components", comps},
          {"rescale_factors", factors},
          {"cluster_eigenvalues", eigs},
          {"rescaled_lambda", matrix_to_json(res.rescaled_lambda)},
          {"report", report_to_json(res.report)}};
}

// ---- files ----

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

} // namespace legsym
