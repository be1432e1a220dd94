#include "nlldg/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nlldg/errors.hpp"

namespace nlldg {

NumericalError::NumericalError(double time, int cell, double value)
    : std::runtime_error("non-finite value " + std::to_string(value) + " in cell " +
                         std::to_string(cell) + " at t = " + std::to_string(time)),
      time_(time), cell_(cell), value_(value) {}

QuadratureRule gauss_legendre(int count) {
  if (count < 1) {
    throw ConfigError("gauss_legendre: point count must be >= 1, got " + std::to_string(count));
  }
  QuadratureRule rule;
  rule.points.assign(count, 0.0);
  rule.weights.assign(count, 0.0);

  // Newton iteration on P_n starting from the Chebyshev-like guess; roots are
  // computed for the upper half and mirrored.
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pn = count == 1 ? x : p1;
      const double pn1 = count == 1 ? 1.0 : p0;
      dp = count * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    const double pn = count == 1 ? x : p1;
    const double pn1 = count == 1 ? 1.0 : p0;
    dp = count * (x * pn - pn1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.points[i] = -x;
    rule.points[count - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.points[count / 2] = 0.0;
  return rule;
}

std::vector<double> chebyshev_lobatto_nodes(int degree) {
  if (degree < 1) {
    throw ConfigError("invalid polynomial degree " + std::to_string(degree) + " (need p >= 1)");
  }
  std::vector<double> nodes(degree + 1, 0.0);
  for (int i = 0; 2 * i < degree; ++i) {
    const double x = -std::cos(std::numbers::pi * i / degree);
    nodes[i] = x;
    nodes[degree - i] = -x;
  }
  nodes.front() = -1.0;
  nodes.back() = 1.0;
  return nodes;
}

BasisSet::BasisSet(int degree, const QuadratureRule& rule)
    : degree_(degree), rule_(rule), nodes_(chebyshev_lobatto_nodes(degree)) {
  const int np = size();
  bary_.assign(np, 1.0);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      if (j != i) bary_[i] /= nodes_[i] - nodes_[j];
    }
  }

  const int ng = rule_.size();
  rule_values_.resize(static_cast<std::size_t>(ng) * np);
  rule_derivatives_.resize(static_cast<std::size_t>(ng) * np);
  for (int g = 0; g < ng; ++g) {
    for (int i = 0; i < np; ++i) {
      rule_values_[g * np + i] = value(i, rule_.points[g]);
      rule_derivatives_[g * np + i] = derivative(i, rule_.points[g]);
    }
  }
  left_.assign(np, 0.0);
  right_.assign(np, 0.0);
  left_.front() = 1.0;
  right_.back() = 1.0;
}

double BasisSet::value(int i, double xi) const {
  double v = bary_[i];
  for (int j = 0; j < size(); ++j) {
    if (j != i) v *= xi - nodes_[j];
  }
  return v;
}

double BasisSet::derivative(int i, double xi) const {
  double sum = 0.0;
  for (int m = 0; m < size(); ++m) {
    if (m == i) continue;
    double term = bary_[i];
    for (int j = 0; j < size(); ++j) {
      if (j != i && j != m) term *= xi - nodes_[j];
    }
    sum += term;
  }
  return sum;
}

void BasisSet::values_at(double xi, double* out) const {
  for (int i = 0; i < size(); ++i) out[i] = value(i, xi);
}

BasisSet build_basis(int degree, const QuadratureRule& rule) {
  if (degree < 1) {
    throw ConfigError("invalid polynomial degree " + std::to_string(degree) + " (need p >= 1)");
  }
  return BasisSet(degree, rule);
}

BasisSet build_basis(int degree) {
  if (degree < 1) {
    throw ConfigError("invalid polynomial degree " + std::to_string(degree) + " (need p >= 1)");
  }
  return BasisSet(degree, gauss_legendre(degree + 1));
}

} // namespace nlldg
