#include "nlldg/time_integration.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace nlldg {

void check_finite(const SolutionField& field) {
  const auto& c = field.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!std::isfinite(c[j])) {
      throw NumericalError(field.time(), static_cast<int>(j / field.nodes_per_cell()), c[j]);
    }
  }
}

StepPlan plan_steps(double T, double dt) {
  StepPlan plan;
  plan.dt = dt;
  plan.total_time = T;
  if (T <= 0.0) return plan;
  plan.steps = std::max(1L, static_cast<long>(std::ceil(T / dt - 1e-9)));
  plan.last_dt = T - (plan.steps - 1) * dt;
  return plan;
}

SimulationResult run_simulation(const RunConfig& config, const SimulationOptions& options) {
  using Clock = std::chrono::steady_clock;
  validate(config);
  const auto setup_start = Clock::now();

  auto mesh = std::make_shared<const Mesh>(config.n, config.length, config.bc);
  auto basis = std::make_shared<const BasisSet>(build_basis(config.p));
  const Profile profile = scenario_profile(config.scenario);
  SolutionField u = project_initial_condition(profile, mesh, basis);
  const GhostValues ghosts =
      config.bc == BoundaryMode::frozen ? frozen_ghosts(profile, *mesh) : GhostValues{};

  LdgOperator op(mesh, basis, config.model(), ghosts, options.segment_points);
  op.timers().enabled = options.timing;
  const LimiterConfig limiter = config.limiter_config();

  const double dt = cfl_dt(mesh->dx(), config.p, config.beta, max_wave_speed());
  const StepPlan plan = plan_steps(config.T, dt);

  SimulationResult result{u, u, {}, {}, 0, dt, min_value(u), max_value(u), false, {}, {}, 0.0};
  result.setup_seconds = std::chrono::duration<double>(Clock::now() - setup_start).count();

  std::vector<double> requested = config.snapshots;
  std::sort(requested.begin(), requested.end());
  std::size_t next_snapshot = 0;
  auto capture = [&](const SolutionField& f) {
    while (next_snapshot < requested.size() && f.time() >= requested[next_snapshot] - 1e-12) {
      result.snapshots.push_back({requested[next_snapshot], f.time(), f});
      ++next_snapshot;
    }
  };
  capture(u);
  if (options.record_mass) result.mass_trace.emplace_back(0.0, total_mass(u));

  auto apply_op = [&op](const SolutionField& in, SolutionField& out) { op.apply(in, out); };
  auto apply_limiter = [&](SolutionField& f) { apply_gsl(f, limiter, ghosts); };
  Rk3Workspace ws;

  const auto loop_start = Clock::now();
  try {
    for (long step = 0; step < plan.steps; ++step) {
      rk3_step(u, plan.step_size(step), apply_op, apply_limiter, ws);
      u.set_time(plan.time_after(step + 1));
      result.steps = step + 1;
      result.min_rho = std::min(result.min_rho, min_value(u));
      result.max_rho = std::max(result.max_rho, max_value(u));
      if (options.record_mass) result.mass_trace.emplace_back(u.time(), total_mass(u));
      capture(u);
    }
  } catch (const NumericalError& e) {
    result.failed = true;
    result.failure = e.what();
  }
  const double total = std::chrono::duration<double>(Clock::now() - loop_start).count();

  result.final_field = u;
  result.timing =
      timing_breakdown(total, op.timers().diffusion, op.timers().nonlocal, result.steps);
  return result;
}

} // namespace nlldg
