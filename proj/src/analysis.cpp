#include "nlldg/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "nlldg/errors.hpp"

namespace nlldg {

TimingReport& TimingReport::operator+=(const TimingReport& other) noexcept {
  standard += other.standard;
  diffusion += other.diffusion;
  nonlocal += other.nonlocal;
  total += other.total;
  steps += other.steps;
  return *this;
}

TimingReport TimingReport::scaled(double factor) const noexcept {
  TimingReport r = *this;
  r.standard *= factor;
  r.diffusion *= factor;
  r.nonlocal *= factor;
  r.total *= factor;
  r.steps = static_cast<long>(std::llround(steps * factor));
  return r;
}

TimingReport timing_breakdown(double total, double diffusion, double nonlocal, long steps) {
  TimingReport r;
  r.total = total;
  r.diffusion = diffusion;
  r.nonlocal = nonlocal;
  r.standard = std::max(0.0, total - diffusion - nonlocal);
  r.steps = steps;
  return r;
}

void to_json(nlohmann::json& j, const TimingReport& r) {
  j = nlohmann::json{{"standard_seconds", r.standard},
                     {"diffusion_seconds", r.diffusion},
                     {"nonlocal_seconds", r.nonlocal},
                     {"total_seconds", r.total},
                     {"steps", r.steps},
                     {"seconds_per_step", r.per_step()},
                     {"standard_pct", r.standard_pct()},
                     {"diffusion_pct", r.diffusion_pct()},
                     {"nonlocal_pct", r.nonlocal_pct()}};
}

double l2_error(const SolutionField& a, const SolutionField& b) {
  const Mesh& ma = a.mesh();
  const Mesh& mb = b.mesh();
  if (std::abs(ma.length() - mb.length()) > 1e-14 * ma.length()) {
    throw ConfigError("l2_error: fields live on different domains");
  }
  const bool a_fine = ma.cells() >= mb.cells();
  const SolutionField& fine = a_fine ? a : b;
  const SolutionField& coarse = a_fine ? b : a;
  const int nf = fine.cells();
  const int nc = coarse.cells();
  if (nf % nc != 0) throw ConfigError("l2_error: meshes are not nested");
  const int ratio = nf / nc;

  const QuadratureRule rule = gauss_legendre(std::max(a.degree(), b.degree()) + 1);
  double sum = 0.0;
  for (int j = 0; j < nf; ++j) {
    const int k = j / ratio;
    const int sub = j % ratio;
    double cell = 0.0;
    for (int g = 0; g < rule.size(); ++g) {
      const double xi_f = rule.points[g];
      // Same point in the coarse cell's reference coordinate.
      const double xi_c = (2.0 * sub + xi_f + 1.0) / ratio - 1.0;
      const double d = evaluate_local(fine, j, xi_f) - evaluate_local(coarse, k, xi_c);
      cell += rule.weights[g] * d * d;
    }
    sum += 0.5 * fine.mesh().dx() * cell;
  }
  return std::sqrt(sum);
}

double convergence_rate(double error_coarse, double error_fine, double h_coarse, double h_fine) {
  if (!(error_coarse > 0.0) || !(error_fine > 0.0)) {
    throw ConfigError("convergence rate undefined for non-positive errors");
  }
  return std::log(error_coarse / error_fine) / std::log(h_coarse / h_fine);
}

double convergence_rate(double error_n20, double error_n320) {
  return convergence_rate(error_n20, error_n320, 1.0 / 20.0, 1.0 / 320.0);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = std::min(x.size(), y.size());
  if (m < 2) throw ConfigError("loglog_slope needs at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

bool strictly_increasing(std::span<const double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) return false;
  }
  return true;
}

} // namespace nlldg
