#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace legsym {

/// One named check; pass holds exactly when max_residual < tol at creation.
struct ResidualCheck {
  std::string name;
  double max_residual = 0.0;
  bool pass = true;
};

/// Collection of named residual checks plus scalar diagnostics.
struct ResidualReport {
  std::vector<ResidualCheck> checks;
  std::map<std::string, double> metadata;

  void add(const std::string& name, double residual, double tol) {
    checks.push_back({name, residual, residual < tol});
  }

  /// Records how far a margin falls short of its floor, relative to the
  /// floor, so margin checks obey the same pass rule as residual checks.
  void add_margin(const std::string& name, double margin, double floor,
                  double tol) {
    const double deficit = margin >= floor ? 0.0 : (floor - margin) / floor;
    checks.push_back({name, deficit, deficit < tol});
    metadata[name + "_margin"] = margin;
  }

  void merge(const std::string& prefix, const ResidualReport& other) {
    for (const auto& c : other.checks)
      checks.push_back({prefix + c.name, c.max_residual, c.pass});
    for (const auto& [k, v] : other.metadata) metadata[prefix + k] = v;
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ResidualCheck& c) { return c.pass; });
  }

  double worst_residual() const {
    double w = 0.0;
    for (const auto& c : checks) w = std::max(w, c.max_residual);
    return w;
  }

  const ResidualCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

} // namespace legsym
