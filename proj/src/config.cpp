#include "nlldg/config.hpp"

#include <cmath>
#include <numbers>

#include "nlldg/errors.hpp"

namespace nlldg {

namespace {

Profile riemann(double left, double right) {
  return [left, right](double x, Side side) {
    if (x < 0.5) return left;
    if (x > 0.5) return right;
    return side == Side::left ? left : right;
  };
}

} // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"rarefaction", "shock_forward", "shock_backward",
                                            "jam_step", "sine"};
  return ids;
}

Profile scenario_profile(const std::string& id) {
  if (id == "rarefaction") return riemann(0.45, 0.20);
  if (id == "shock_forward") return riemann(0.15, 0.45);
  if (id == "shock_backward") return riemann(0.35, 0.65);
  if (id == "jam_step") return riemann(0.0, 1.0);
  if (id == "sine") {
    return continuous_profile(
        [](double x) { return 0.5 + 0.4 * std::sin(2.0 * std::numbers::pi * (x + 0.5)); });
  }
  std::string known;
  for (const auto& s : scenario_ids()) known += (known.empty() ? "" : ", ") + s;
  throw ConfigError("unknown scenario '" + id + "' (available: " + known + ")");
}

RunConfig scenario_defaults(const std::string& id) {
  scenario_profile(id);  // validates the id
  RunConfig c;
  c.scenario = id;
  if (id == "sine") {
    c.p = 1;
    c.n = 320;
    c.T = 0.1;
    c.beta = 0.1;
    c.gamma = 0.1;
    c.kappa = 0.5;
    c.bc = BoundaryMode::periodic;
    c.limiter = false;
    c.snapshots = {0.1};
    return c;
  }
  c.p = 1;
  c.n = 320;
  c.T = 1.0;
  c.beta = 0.2;
  c.m_tvb = 35.0;
  c.gamma = 0.1;
  c.kappa = id == "jam_step" ? 1.0 : 0.5;
  c.bc = BoundaryMode::frozen;
  c.limiter = true;
  c.snapshots = {0.25, 0.5, 1.0};
  return c;
}

void validate(const RunConfig& c) {
  scenario_profile(c.scenario);
  if (c.p < 1) throw ConfigError("p must be >= 1");
  if (c.n < 2) throw ConfigError("n must be >= 2");
  if (!(c.length > 0.0)) throw ConfigError("domain length must be positive");
  if (!(c.beta > 0.0 && c.beta <= 1.0)) throw ConfigError("beta must lie in (0, 1]");
  if (!(c.T >= 0.0) || !std::isfinite(c.T)) throw ConfigError("T must be finite and >= 0");
  if (!(c.gamma >= 0.0)) throw ConfigError("gamma must be >= 0");
  if (!(c.kappa >= 0.0 && c.kappa <= 1.0)) throw ConfigError("kappa must lie in [0, 1]");
  if (!(c.m_tvb >= 0.0)) throw ConfigError("mtvb must be >= 0");
  if (c.repeats < 1) throw ConfigError("repeats must be >= 1");
  for (double t : c.snapshots) {
    if (!(t >= 0.0 && t <= c.T)) throw ConfigError("snapshot times must lie in [0, T]");
  }
}

std::vector<std::string> config_warnings(const RunConfig& c) {
  std::vector<std::string> w;
  if (c.kappa >= 1.0) {
    w.emplace_back("kappa = 1 is outside (0, 1); rho_hat may leave [0, 1] for interior densities");
  }
  return w;
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"scenario", c.scenario},
                     {"p", c.p},
                     {"n", c.n},
                     {"length", c.length},
                     {"beta", c.beta},
                     {"T", c.T},
                     {"gamma", c.gamma},
                     {"kappa", c.kappa},
                     {"mtvb", c.m_tvb},
                     {"limiter", c.limiter},
                     {"bc", to_string(c.bc)},
                     {"alpha", to_string(c.alpha)},
                     {"integrand", to_string(c.integrand)},
                     {"snapshots", c.snapshots},
                     {"out", c.out_dir},
                     {"repeats", c.repeats}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  try {
    c.scenario = j.value("scenario", c.scenario);
    c.p = j.value("p", c.p);
    c.n = j.value("n", c.n);
    c.length = j.value("length", c.length);
    c.beta = j.value("beta", c.beta);
    c.T = j.value("T", c.T);
    c.gamma = j.value("gamma", c.gamma);
    c.kappa = j.value("kappa", c.kappa);
    c.m_tvb = j.value("mtvb", c.m_tvb);
    c.limiter = j.value("limiter", c.limiter);
    if (j.contains("bc")) c.bc = parse_boundary_mode(j.at("bc").get<std::string>());
    if (j.contains("alpha")) c.alpha = parse_alpha_mode(j.at("alpha").get<std::string>());
    if (j.contains("integrand")) {
      c.integrand = parse_integrand_mode(j.at("integrand").get<std::string>());
    }
    c.snapshots = j.value("snapshots", c.snapshots);
    c.out_dir = j.value("out", c.out_dir);
    c.repeats = j.value("repeats", c.repeats);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

} // namespace nlldg
