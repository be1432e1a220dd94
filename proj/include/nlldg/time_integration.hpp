#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlldg/analysis.hpp"
#include "nlldg/config.hpp"
#include "nlldg/errors.hpp"
#include "nlldg/ldg_operator.hpp"
#include "nlldg/mesh.hpp"

namespace nlldg {

/// Stage storage for rk3_step.
struct Rk3Workspace {
  std::optional<SolutionField> stage1;
  std::optional<SolutionField> stage2;
  std::optional<SolutionField> rate;

  void prepare(const SolutionField& like) {
    if (!stage1 || stage1->coefficients().size() != like.coefficients().size()) {
      stage1.emplace(like);
      stage2.emplace(like);
      rate.emplace(like);
    }
  }
};

/// Throws NumericalError on the first non-finite coefficient.
void check_finite(const SolutionField& field);

/// One SSP-RK3 step, u <- u(t + dt). `op(u, dudt)` evaluates the
/// semi-discrete operator and `limit(u)` post-processes every stage. Stages
/// are written as increments of u, so a zero operator leaves u bitwise
/// unchanged:
///   u1 = u + dt L(u)
///   u2 = u + 1/4 (u1 + dt L(u1) - u)
///   u  <- u + 2/3 (u2 + dt L(u2) - u)
template <class Operator, class Limiter>
void rk3_step(SolutionField& u, double dt, Operator&& op, Limiter&& limit, Rk3Workspace& ws) {
  ws.prepare(u);
  auto& u1 = ws.stage1->coefficients();
  auto& u2 = ws.stage2->coefficients();
  auto& l = ws.rate->coefficients();
  auto& u0 = u.coefficients();
  const std::size_t m = u0.size();
  const double t = u.time();

  op(u, *ws.rate);
  for (std::size_t j = 0; j < m; ++j) u1[j] = u0[j] + dt * l[j];
  ws.stage1->set_time(t + dt);
  limit(*ws.stage1);
  check_finite(*ws.stage1);

  op(*ws.stage1, *ws.rate);
  for (std::size_t j = 0; j < m; ++j) u2[j] = u0[j] + 0.25 * (u1[j] + dt * l[j] - u0[j]);
  ws.stage2->set_time(t + 0.5 * dt);
  limit(*ws.stage2);
  check_finite(*ws.stage2);

  op(*ws.stage2, *ws.rate);
  for (std::size_t j = 0; j < m; ++j) u0[j] = u0[j] + (2.0 / 3.0) * (u2[j] + dt * l[j] - u0[j]);
  u.set_time(t + dt);
  limit(u);
  check_finite(u);
}

/// Uniform step count and sizes for reaching T: all steps are dt except the
/// last, which is clipped so that the final time is exactly T.
struct StepPlan {
  long steps = 0;
  double dt = 0.0;
  double last_dt = 0.0;
  double total_time = 0.0;

  double step_size(long step) const noexcept { return step + 1 < steps ? dt : last_dt; }
  /// Time reached after `step` steps; exactly T after the last one.
  double time_after(long step) const noexcept {
    return step >= steps ? total_time : step * dt;
  }
};

StepPlan plan_steps(double T, double dt);

struct Snapshot {
  double requested = 0.0;
  double time = 0.0;
  SolutionField field;
};

struct SimulationResult {
  SolutionField initial;
  SolutionField final_field;
  std::vector<Snapshot> snapshots;
  std::vector<std::pair<double, double>> mass_trace;  ///< (t, mass) after every step
  long steps = 0;
  double dt = 0.0;
  double min_rho = 0.0;
  double max_rho = 0.0;
  bool failed = false;
  std::string failure;
  TimingReport timing;
  double setup_seconds = 0.0;
};

struct SimulationOptions {
  bool timing = true;
  bool record_mass = true;
  /// Per-piece Gauss points of the convolution; 0 selects p + 1.
  int segment_points = 0;
};

/// Advances the scenario of `config` from t = 0 to T. Snapshots are captured
/// at the first step boundary at or after each requested time. A non-finite
/// state stops the run with `failed` set and the trajectory so far kept.
SimulationResult run_simulation(const RunConfig& config, const SimulationOptions& options = {});

} // namespace nlldg
