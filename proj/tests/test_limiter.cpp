#include <doctest.h>

#include <cmath>

#include "nlldg/config.hpp"
#include "nlldg/ldg_operator.hpp"
#include "nlldg/limiter.hpp"
#include "nlldg/time_integration.hpp"
#include "support.hpp"

using namespace nlldg;
using namespace nlldg::test;

namespace {

double average_variation(const SolutionField& f) {
  double tv = 0.0;
  for (int k = 0; k + 1 < f.cells(); ++k) tv += std::abs(cell_average(f, k + 1) - cell_average(f, k));
  return tv;
}

SolutionField random_steps(Rng& rng, int p, int n) {
  SolutionField f(make_mesh(n, BoundaryMode::frozen), make_basis(p));
  for (int k = 0; k < n; ++k) {
    const double v = uniform(rng, 0.1, 0.9);
    for (int i = 0; i <= p; ++i) f(k, i) = v;
  }
  return f;
}

}  // namespace

TEST_SUITE("limiter") {

TEST_CASE("minmod") {
  CHECK(minmod1(1, 2, 3) == 1);
  CHECK(minmod1(1, -2, 3) == 0);
  CHECK(minmod1(-0.5, -0.2, -0.9) == -0.2);
  CHECK(minmod1(0, 1, 1) == 0);
  CHECK(minmod1(-1, -1, 0) == 0);
}

TEST_CASE("TVB-corrected minmod") {
  const double dx = 1.0 / 320;
  CHECK(std::abs(35 * dx * dx - 3.418e-4) < 1e-7);
  CHECK(minmod2(1e-4, -1.0, 5.0, 35, dx) == 1e-4);
  CHECK(minmod2(0.01, 0.02, 0.03, 35, dx) == 0.01);
  CHECK(minmod2(0.05, 0.02, 0.03, 35, dx) == 0.02);
  CHECK(minmod2(0.05, -0.02, 0.03, 35, dx) == 0.0);
  Rng rng(501);
  for (int s = 0; s < 1000; ++s) {
    const double a = uniform(rng, -1, 1), b = uniform(rng, -1, 1), c = uniform(rng, -1, 1);
    CHECK(minmod2(a, b, c, 0.0, 0.1) == (a == 0.0 ? a : minmod1(a, b, c)));
  }
}

TEST_CASE("flat and step data are untouched") {
  SolutionField c = interpolate([](double) { return 0.4; }, 2, 20, BoundaryMode::frozen);
  const SolutionField before = c;
  CHECK(apply_gsl(c, LimiterConfig{true, 0.0}, GhostValues{0.4, 0.4}) == 0);
  CHECK(c.same_values(before));

  const auto mesh = make_mesh(40, BoundaryMode::frozen);
  const auto profile = scenario_profile("jam_step");
  SolutionField step = project_initial_condition(profile, mesh, make_basis(1));
  const SolutionField step0 = step;
  CHECK(apply_gsl(step, LimiterConfig{true, 35.0}, frozen_ghosts(profile, *mesh)) == 0);
  CHECK(step.same_values(step0));
}

TEST_CASE("an overshooting cell is flattened to the limited slope") {
  SolutionField f(make_mesh(3, BoundaryMode::frozen), make_basis(1));
  f.coefficients() = {0.0, 0.0, 0.0, 1.2, 1.0, 1.0};
  CHECK(apply_gsl(f, LimiterConfig{true, 0.0}, GhostValues{0.0, 1.0}) == 1);
  CHECK(std::abs(f(1, 0) - 0.2) < 1e-15);
  CHECK(std::abs(f(1, 1) - 1.0) < 1e-15);
  CHECK(f(0, 0) == 0.0);
  CHECK(f(2, 1) == 1.0);
}

TEST_CASE("a cell whose slope is within the neighbour differences is kept") {
  SolutionField f(make_mesh(3, BoundaryMode::frozen), make_basis(1));
  f.coefficients() = {0.0, 0.0, 0.2, 0.9, 1.0, 1.0};
  const SolutionField before = f;
  CHECK(apply_gsl(f, LimiterConfig{true, 35.0}, GhostValues{0.0, 1.0}) == 0);
  CHECK(f.same_values(before));
  CHECK(std::abs(cell_average(f, 1) - 0.55) < 1e-15);
}

TEST_CASE("property: limiting preserves averages and is idempotent") {
  Rng rng(502);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = uniform_int(rng, 1, 4);
    const int n = uniform_int(rng, 3, 50);
    const auto bc = trial % 2 ? BoundaryMode::frozen : BoundaryMode::periodic;
    SolutionField f = random_field(rng, p, n, 0.0, 1.0, bc);
    const SolutionField before = f;
    const LimiterConfig cfg{true, uniform(rng, 0.0, 50.0)};
    const GhostValues ghosts{uniform(rng, 0, 1), uniform(rng, 0, 1)};
    apply_gsl(f, cfg, ghosts);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(cell_average(f, k) - cell_average(before, k)) < 1e-14);
    }
    const SolutionField once = f;
    CHECK(apply_gsl(f, cfg, ghosts) == 0);
    CHECK(f.same_values(once));
  }
}

TEST_CASE("smooth sine data is not limited") {
  for (int p = 1; p <= 3; ++p) {
    for (int n : {40, 80, 160, 320}) {
      SolutionField f =
          project_initial_condition(scenario_profile("sine"), make_mesh(n), make_basis(p));
      CHECK(apply_gsl(f, LimiterConfig{true, 35.0}) == 0);
    }
  }
}

TEST_CASE("disabled limiter does nothing") {
  Rng rng(503);
  SolutionField f = random_field(rng, 2, 10, 0.0, 1.0);
  const SolutionField before = f;
  CHECK(apply_gsl(f, LimiterConfig{false, 0.0}) == 0);
  CHECK(f.same_values(before));
}

TEST_CASE("property: limited steps do not increase the variation of averages") {
  Rng rng(504);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform_int(rng, 10, 40);
    SolutionField u = random_steps(rng, 1, n);
    const GhostValues ghosts{cell_average(u, 0), cell_average(u, n - 1)};
    LdgOperator op(u.mesh_ptr(), u.basis_ptr(), ModelParams{0.0, 0.0}, ghosts);
    const LimiterConfig cfg{true, 0.0};
    const double dt = cfl_dt(u.mesh().dx(), 1, 0.2, max_wave_speed());
    Rk3Workspace ws;
    for (int step = 0; step < 20; ++step) {
      const double tv0 = average_variation(u);
      rk3_step(u, dt, [&](const SolutionField& a, SolutionField& b) { op.apply(a, b); },
               [&](SolutionField& a) { apply_gsl(a, cfg, ghosts); }, ws);
      CHECK(average_variation(u) <= tv0 + 1e-12);
    }
  }
}

}  // TEST_SUITE
