#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nlldg/limiter.hpp"
#include "nlldg/mesh.hpp"
#include "nlldg/physics.hpp"

namespace nlldg {

struct RunConfig {
  std::string scenario = "sine";
  int p = 1;
  int n = 320;
  double length = 1.0;
  double beta = 0.1;
  double T = 0.1;
  double gamma = 0.1;
  double kappa = 0.5;
  double m_tvb = 35.0;
  bool limiter = false;
  BoundaryMode bc = BoundaryMode::periodic;
  AlphaMode alpha = AlphaMode::local_interface;
  IntegrandMode integrand = IntegrandMode::full_rho_hat;
  std::vector<double> snapshots;
  std::string out_dir = "out";
  int repeats = 20;

  ModelParams model() const { return {gamma, kappa, alpha, integrand}; }
  LimiterConfig limiter_config() const { return {limiter, m_tvb}; }

  bool operator==(const RunConfig&) const = default;
};

/// Scenario ids accepted by scenario_profile / scenario_defaults.
const std::vector<std::string>& scenario_ids();

/// Initial density of a scenario. Riemann data jump at x = 0.5.
Profile scenario_profile(const std::string& id);

/// Defaults for a scenario. Riemann scenarios: p = 1, n = 320, beta = 0.2,
/// T = 1, M = 35, frozen BC, limiter on, snapshots {0.25, 0.5, 1}. Sine:
/// T = 0.1, beta = 0.1, periodic, limiter off.
RunConfig scenario_defaults(const std::string& id);

/// Throws ConfigError when a value is out of range.
void validate(const RunConfig& config);

/// Non-fatal remarks about a valid config (e.g. kappa = 1).
std::vector<std::string> config_warnings(const RunConfig& config);

void to_json(nlohmann::json& j, const RunConfig& config);
/// Missing keys keep the values already in `config`.
void from_json(const nlohmann::json& j, RunConfig& config);

} // namespace nlldg
