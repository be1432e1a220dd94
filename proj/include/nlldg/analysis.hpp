#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "nlldg/mesh.hpp"

namespace nlldg {

/// Wall-clock split of a run. `standard` absorbs everything not tagged as
/// diffusion or non-local, so the three buckets add up to `total`.
struct TimingReport {
  double standard = 0.0;
  double diffusion = 0.0;
  double nonlocal = 0.0;
  double total = 0.0;
  long steps = 0;

  double standard_pct() const noexcept { return pct(standard); }
  double diffusion_pct() const noexcept { return pct(diffusion); }
  double nonlocal_pct() const noexcept { return pct(nonlocal); }
  double per_step() const noexcept { return steps > 0 ? total / steps : 0.0; }

  TimingReport& operator+=(const TimingReport& other) noexcept;
  TimingReport scaled(double factor) const noexcept;

private:
  double pct(double part) const noexcept { return total > 0.0 ? 100.0 * part / total : 0.0; }
};

/// Builds a report from measured diffusion/non-local seconds and the total.
TimingReport timing_breakdown(double total, double diffusion, double nonlocal, long steps);

void to_json(nlohmann::json& j, const TimingReport& report);

/// sqrt(int (a - b)^2 dx) for fields on nested uniform meshes of the same
/// domain. Exact: per fine cell the integrand is a polynomial, integrated
/// with max(p_a, p_b) + 1 Gauss points. Throws ConfigError if not nested.
double l2_error(const SolutionField& a, const SolutionField& b);

/// m = log(e_coarse / e_fine) / log(h_coarse / h_fine).
double convergence_rate(double error_coarse, double error_fine, double h_coarse, double h_fine);

/// Rate between n = 20 and n = 320 resolutions.
double convergence_rate(double error_n20, double error_n320);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// True when values are strictly increasing.
bool strictly_increasing(std::span<const double> values);

} // namespace nlldg
