#include <doctest.h>

#include <cmath>
#include <limits>

#include "nlldg/basis.hpp"
#include "nlldg/errors.hpp"
#include "nlldg/physics.hpp"
#include "support.hpp"

using namespace nlldg;
using namespace nlldg::test;

TEST_SUITE("physics") {

TEST_CASE("demand and velocity") {
  CHECK(demand(0.0) == 0.0);
  CHECK(demand(1.0) == 0.0);
  CHECK(demand(0.5) == 0.25);
  CHECK(velocity(0.0) == 1.0);
  CHECK(velocity(1.0) == 0.0);
  CHECK(std::abs(velocity(0.33) - 0.67) < 1e-15);
}

TEST_CASE("perceived density examples") {
  CHECK(perceived_density(0.5, 0.0, 0.25) == 0.5);
  CHECK(perceived_density(1.0, 5.0, 0.5) == 1.0);
  CHECK(std::abs(perceived_density(0.5, 1e3, 0.5) - 0.625) < 1e-15);
  CHECK(std::abs(perceived_density(0.5, -1e3, 0.5) - 0.375) < 1e-15);
}

TEST_CASE("saturation agrees with tanh and clamps") {
  for (double u = -25.0; u <= 25.0; u += 0.01) {
    CHECK(std::abs(saturation(u) - std::tanh(u)) < 1e-15);
    CHECK(saturation(-u) == -saturation(u));
  }
  CHECK(saturation(0.0) == 0.0);
  CHECK(saturation(1e-300) == doctest::Approx(1e-300));
  CHECK(saturation(21.0) == 1.0);
  CHECK(saturation(-21.0) == -1.0);
  CHECK(saturation(std::numeric_limits<double>::infinity()) == 1.0);
}

TEST_CASE("integrand modes") {
  CHECK(std::abs(convolution_integrand(0.5, 1.0, 0.5, IntegrandMode::full_rho_hat) -
                 (0.5 + 0.125 * std::tanh(1.0))) < 1e-15);
  CHECK(std::abs(convolution_integrand(0.5, 1.0, 0.5, IntegrandMode::simplified) -
                 (0.5 + 0.5 * std::tanh(1.0))) < 1e-15);
  CHECK(convolution_integrand(0.3, 7.0, 0.0, IntegrandMode::simplified) == 0.3);
}

TEST_CASE("property: perceived density stays in [0, 1]") {
  Rng rng(101);
  int violations = 0;
  for (int s = 0; s < 100000; ++s) {
    const double rho = uniform(rng, 0.0, 1.0);
    const double sigma = uniform(rng, -50.0, 50.0);
    const double kappa = uniform(rng, 0.0, 1.0);
    const double r = perceived_density(rho, sigma, kappa);
    if (r < -1e-15 || r > 1.0 + 1e-15) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("property: perceived density is nondecreasing in sigma") {
  Rng rng(102);
  for (int s = 0; s < 2000; ++s) {
    const double rho = uniform(rng, 0.01, 0.99);
    const double kappa = uniform(rng, 0.01, 0.99);
    const double a = uniform(rng, -30.0, 30.0);
    const double b = a + uniform(rng, 0.0, 5.0);
    CHECK(perceived_density(rho, a, kappa) <= perceived_density(rho, b, kappa));
  }
}

TEST_CASE("kernel") {
  CHECK(kernel_eval(0.0, 0.1) == 20.0);
  CHECK(kernel_eval(0.1, 0.1) == 0.0);
  CHECK(kernel_eval(-0.01, 0.1) == 0.0);
  CHECK(kernel_eval(0.2, 0.1) == 0.0);
  CHECK(kernel_eval(0.03, 0.1) > kernel_eval(0.06, 0.1));
  CHECK_THROWS_AS(kernel_eval(0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(kernel_eval(0.0, -1.0), ConfigError);
  const QuadratureRule r = gauss_legendre(2);
  for (double gamma : {0.05, 0.1, 0.5}) {
    double sum = 0.0;
    for (int g = 0; g < r.size(); ++g) {
      sum += 0.5 * gamma * r.weights[g] * kernel_eval(0.5 * gamma * (r.points[g] + 1.0), gamma);
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("physical flux") {
  CHECK(flux_qF(0.5, 0.0) == 0.25);
  CHECK(flux_qF(1.0, 0.3) == 0.0);
  CHECK(std::abs(flux_qF(0.33, 0.33) - 0.33 * 0.67 * 0.67) < 1e-15);
  CHECK(std::abs(flux_qF(0.33, 0.33) - 0.1481) < 1e-4);
  Rng rng(103);
  for (int s = 0; s < 1000; ++s) {
    CHECK(flux_qF(uniform(rng, 0, 1), uniform(rng, 0, 1)) >= 0.0);
  }
}

TEST_CASE("numerical flux") {
  CHECK(std::abs(numerical_flux_Q(0.3, 0.3, 0.2, 0.7) - 0.168) < 1e-15);
  ModelParams local;
  ModelParams global;
  global.alpha_mode = AlphaMode::global;
  CHECK(numerical_flux_Q(0.0, 1.0, 1.0, interface_alpha(local, 1.0)) == 0.0);
  CHECK(numerical_flux_Q(0.0, 1.0, 1.0, interface_alpha(global, 1.0)) == -0.5);
  CHECK(interface_alpha(local, 0.25) == 0.75);
  CHECK(interface_alpha(global, 0.25) == 1.0);
  Rng rng(104);
  for (int s = 0; s < 1000; ++s) {
    const double u = uniform(rng, 0, 1), r = uniform(rng, 0, 1);
    CHECK(std::abs(numerical_flux_Q(u, u, r, uniform(rng, 0, 1)) - demand(u) * velocity(r)) <=
          1e-15);
  }
}

TEST_CASE("wave speed against a grid search") {
  double best = 0.0, arg = -1.0;
  for (int i = 0; i <= 100000; ++i) {
    const double rho = i / 100000.0;
    const double v = std::abs((1.0 - rho) * (1.0 - 3.0 * rho));
    if (v > best) {
      best = v;
      arg = rho;
    }
  }
  CHECK(max_wave_speed() == doctest::Approx(best).epsilon(1e-12));
  CHECK(arg == 0.0);
  CHECK(max_wave_speed() == 1.0);
  const double rho = 2.0 / 3.0;
  CHECK(std::abs(std::abs((1.0 - rho) * (1.0 - 3.0 * rho)) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("CFL step") {
  CHECK(std::abs(cfl_dt(1.0 / 320, 1, 0.2, 1.0) - 1.0 / 4800) < 1e-18);
  CHECK(std::abs(cfl_dt(1.0 / 20, 3, 0.1, 1.0) - 7.142857142857143e-4) < 1e-16);
  CHECK(std::abs(cfl_dt(0.01, 0, 1.0, 1.0) - 0.01) < 1e-18);
  CHECK_THROWS_AS(cfl_dt(0.01, 1, 0.0, 1.0), ConfigError);
  CHECK_THROWS_AS(cfl_dt(0.01, 1, 1.5, 1.0), ConfigError);
  CHECK_THROWS_AS(cfl_dt(0.01, 1, -0.2, 1.0), ConfigError);
}

TEST_CASE("mode parsing and parameter validation") {
  CHECK(parse_alpha_mode("global") == AlphaMode::global);
  CHECK(parse_alpha_mode("local") == AlphaMode::local_interface);
  CHECK(parse_integrand_mode("full") == IntegrandMode::full_rho_hat);
  CHECK(parse_integrand_mode("simplified") == IntegrandMode::simplified);
  CHECK(to_string(AlphaMode::local_interface) == "local");
  CHECK(to_string(IntegrandMode::simplified) == "simplified");
  CHECK_THROWS_AS(parse_alpha_mode("max"), ConfigError);
  CHECK_THROWS_AS(parse_integrand_mode("exact"), ConfigError);

  CHECK_NOTHROW(validate(ModelParams{0.0, 0.0}));
  CHECK_NOTHROW(validate(ModelParams{0.1, 1.0}));
  CHECK_THROWS_AS(validate(ModelParams{-0.1, 0.0}), ConfigError);
  CHECK_THROWS_AS(validate(ModelParams{0.1, 1.5}), ConfigError);
  CHECK_THROWS_AS(validate(ModelParams{0.1, -0.5}), ConfigError);
  CHECK(ModelParams{0.1, 0.0}.nonlocal());
  CHECK_FALSE(ModelParams{0.0, 0.3}.nonlocal());
  CHECK(ModelParams{0.0, 0.3}.diffusive());
}

}  // TEST_SUITE
