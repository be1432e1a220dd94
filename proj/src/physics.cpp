#include "nlldg/physics.hpp"

#include <algorithm>
#include <array>

#include "nlldg/errors.hpp"

namespace nlldg {

std::string to_string(AlphaMode mode) {
  return mode == AlphaMode::global ? "global" : "local";
}

std::string to_string(IntegrandMode mode) {
  return mode == IntegrandMode::full_rho_hat ? "full" : "simplified";
}

AlphaMode parse_alpha_mode(const std::string& text) {
  if (text == "global") return AlphaMode::global;
  if (text == "local" || text == "local_interface") return AlphaMode::local_interface;
  throw ConfigError("unknown alpha mode '" + text + "' (expected global|local)");
}

IntegrandMode parse_integrand_mode(const std::string& text) {
  if (text == "full" || text == "full_rho_hat") return IntegrandMode::full_rho_hat;
  if (text == "simplified") return IntegrandMode::simplified;
  throw ConfigError("unknown integrand mode '" + text + "' (expected full|simplified)");
}

void validate(const ModelParams& params) {
  if (!(params.gamma >= 0.0)) throw ConfigError("gamma must be >= 0");
  if (!(params.kappa >= 0.0 && params.kappa <= 1.0)) {
    throw ConfigError("kappa must lie in [0, 1]");
  }
}

double kernel_eval(double x, double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("kernel horizon gamma must be > 0");
  if (x < 0.0 || x > gamma) return 0.0;
  return (2.0 / gamma) * (1.0 - x / gamma);
}

double max_wave_speed() {
  // g(rho) = (1 - rho)(1 - 3 rho) is a parabola; its extremum sits at 2/3.
  constexpr std::array<double, 3> candidates{0.0, 2.0 / 3.0, 1.0};
  double best = 0.0;
  for (double rho : candidates) best = std::max(best, std::abs((1.0 - rho) * (1.0 - 3.0 * rho)));
  return best;
}

double interface_alpha(const ModelParams& params, double r) noexcept {
  if (params.alpha_mode == AlphaMode::global) return max_wave_speed();
  return std::abs(velocity(r)) * max_demand_slope;
}

double cfl_dt(double dx, int degree, double beta, double alpha) {
  if (!(beta > 0.0 && beta <= 1.0)) throw ConfigError("CFL number beta must lie in (0, 1]");
  if (!(alpha > 0.0)) throw ConfigError("wave speed must be positive");
  return beta * dx / ((2.0 * degree + 1.0) * alpha);
}

} // namespace nlldg
