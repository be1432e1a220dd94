#pragma once

#include <cmath>
#include <string>

namespace nlldg {

/// How the Lax-Friedrichs dissipation coefficient is chosen at an interface.
enum class AlphaMode {
  global,          ///< alpha = max over [0,1] of |d/drho (D(rho) U(rho))|
  local_interface  ///< alpha = U(R) * max over [0,1] of |D'(rho)|
};

/// Integrand of the non-local average.
enum class IntegrandMode {
  full_rho_hat,  ///< rho + kappa rho (1 - rho) Psi(sigma)
  simplified     ///< rho + kappa Psi(sigma)
};

std::string to_string(AlphaMode mode);
std::string to_string(IntegrandMode mode);
AlphaMode parse_alpha_mode(const std::string& text);
IntegrandMode parse_integrand_mode(const std::string& text);

struct ModelParams {
  double gamma = 0.1;  ///< look-ahead horizon; 0 gives the local model
  double kappa = 0.0;  ///< diffusion intensity, nominally in [0, 1)
  AlphaMode alpha_mode = AlphaMode::local_interface;
  IntegrandMode integrand = IntegrandMode::full_rho_hat;

  bool nonlocal() const noexcept { return gamma > 0.0; }
  bool diffusive() const noexcept { return kappa != 0.0; }
};

/// Throws ConfigError unless gamma >= 0 and kappa in [0, 1]. kappa = 1 is
/// accepted (jam-step figure) even though the boundedness proof needs kappa < 1.
void validate(const ModelParams& params);

inline double demand(double rho) noexcept { return rho * (1.0 - rho); }

inline double velocity(double r) noexcept { return 1.0 - r; }

/// tanh, clamped to +-1 beyond |u| > 20. Evaluated through exp(-2|u|), which is
/// several times cheaper than std::tanh here and agrees with it to a few ulps
/// in absolute terms; the result stays inside [-1, 1] and is exactly odd.
inline double saturation(double u) noexcept {
  if (u > 20.0) return 1.0;
  if (u < -20.0) return -1.0;
  const double e = std::exp(-2.0 * std::abs(u));
  return std::copysign((1.0 - e) / (1.0 + e), u);
}

inline double perceived_density(double rho, double sigma, double kappa) noexcept {
  return rho + kappa * demand(rho) * saturation(sigma);
}

/// Pointwise integrand of the non-local average for the chosen mode.
inline double convolution_integrand(double rho, double sigma, double kappa,
                                    IntegrandMode mode) noexcept {
  if (mode == IntegrandMode::simplified) return rho + kappa * saturation(sigma);
  return perceived_density(rho, sigma, kappa);
}

/// Linear look-ahead kernel (2/gamma)(1 - x/gamma) on [0, gamma]; throws for gamma <= 0.
double kernel_eval(double x, double gamma);

inline double flux_qF(double rho, double r) noexcept { return demand(rho) * velocity(r); }

/// max |D'(rho)| over [0, 1] for D(rho) = rho (1 - rho).
inline constexpr double max_demand_slope = 1.0;

/// max over rho in [0, 1] of |d/drho [D(rho) U(rho)]| = |(1 - rho)(1 - 3 rho)|.
double max_wave_speed();

double interface_alpha(const ModelParams& params, double r) noexcept;

/// Lax-Friedrichs flux 1/2 [(D(uL) + D(uR)) U(R) + alpha (uL - uR)].
inline double numerical_flux_Q(double u_left, double u_right, double r, double alpha) noexcept {
  return 0.5 * ((demand(u_left) + demand(u_right)) * velocity(r) + alpha * (u_left - u_right));
}

/// dt = beta dx / ((2p + 1) alpha). beta must lie in (0, 1].
double cfl_dt(double dx, int degree, double beta, double alpha);

} // namespace nlldg
