#include "nlldg/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nlldg {

namespace {

// Slack for deciding that minmod2 returned its first argument; keeps a
// limited cell from being flagged again because of rounding in its average.
constexpr double detection_tolerance = 1e-13;

inline int sign(double x) noexcept { return (x > 0.0) - (x < 0.0); }

} // namespace

double minmod1(double a, double b, double c) noexcept {
  const int s = sign(a);
  if (s == 0 || s != sign(b) || s != sign(c)) return 0.0;
  return s * std::min({std::abs(a), std::abs(b), std::abs(c)});
}

double minmod2(double a, double b, double c, double m_tvb, double dx) noexcept {
  if (std::abs(a) <= m_tvb * dx * dx) return a;
  return minmod1(a, b, c);
}

int apply_gsl(SolutionField& field, const LimiterConfig& config, const GhostValues& ghosts) {
  if (!config.enabled) return 0;
  const int n = field.cells();
  const int p = field.degree();
  const double dx = field.mesh().dx();
  const bool periodic = field.mesh().bc() == BoundaryMode::periodic;
  const BasisSet& basis = field.basis();
  const QuadratureRule& rule = basis.rule();

  std::vector<double> avg(n);
  for (int k = 0; k < n; ++k) avg[k] = cell_average(field, k);

  int modified = 0;
  for (int k = 0; k < n; ++k) {
    const double left = k > 0 ? avg[k - 1] : (periodic ? avg[n - 1] : ghosts.left);
    const double right = k + 1 < n ? avg[k + 1] : (periodic ? avg[0] : ghosts.right);
    const double mean = avg[k];
    const double dplus = right - mean;
    const double dminus = mean - left;

    const double a_right = field.right_trace(k) - mean;
    const double a_left = mean - field.left_trace(k);
    const double m_right = minmod2(a_right, dplus, dminus, config.m_tvb, dx);
    const double m_left = minmod2(a_left, dplus, dminus, config.m_tvb, dx);
    const double tol = detection_tolerance * std::max(1.0, std::abs(mean));
    if (std::abs(m_right - a_right) <= tol && std::abs(m_left - a_left) <= tol) continue;

    double moment = 0.0;
    for (int g = 0; g < rule.size(); ++g) {
      double v = 0.0;
      for (int i = 0; i <= p; ++i) v += field(k, i) * basis.at_rule(g, i);
      moment += rule.weights[g] * v * rule.points[g];
    }
    const double slope = minmod2(1.5 * moment, dplus, dminus, config.m_tvb, dx);
    for (int i = 0; i <= p; ++i) field(k, i) = mean + slope * basis.nodes()[i];
    ++modified;
  }
  return modified;
}

} // namespace nlldg
