#pragma once

#include <vector>

namespace nlldg {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const noexcept { return static_cast<int>(points.size()); }
};

QuadratureRule gauss_legendre(int count);

/// Chebyshev-Gauss-Lobatto points -cos(pi i / p), i = 0..p, with exact
/// endpoints and exact mirror symmetry about 0.
std::vector<double> chebyshev_lobatto_nodes(int degree);

/// Cardinal (Lagrange) basis on the Chebyshev-Lobatto nodes of the reference
/// element, tabulated at the points of a quadrature rule and at both ends.
class BasisSet {
public:
  BasisSet(int degree, const QuadratureRule& rule);

  int degree() const noexcept { return degree_; }
  int size() const noexcept { return degree_ + 1; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const QuadratureRule& rule() const noexcept { return rule_; }

  double value(int i, double xi) const;
  /// d(phi_i)/d(xi), reference-coordinate derivative.
  double derivative(int i, double xi) const;

  /// Fills out[i] = phi_i(xi) for all i.
  void values_at(double xi, double* out) const;

  // Tables indexed [g * size() + i].
  const std::vector<double>& values_at_rule() const noexcept { return rule_values_; }
  const std::vector<double>& derivatives_at_rule() const noexcept { return rule_derivatives_; }

  double at_rule(int g, int i) const { return rule_values_[g * size() + i]; }
  double derivative_at_rule(int g, int i) const { return rule_derivatives_[g * size() + i]; }

  // phi_i(-1) and phi_i(+1); cardinality makes these unit vectors.
  const std::vector<double>& left_values() const noexcept { return left_; }
  const std::vector<double>& right_values() const noexcept { return right_; }

private:
  int degree_;
  QuadratureRule rule_;
  std::vector<double> nodes_;
  std::vector<double> bary_;
  std::vector<double> rule_values_;
  std::vector<double> rule_derivatives_;
  std::vector<double> left_;
  std::vector<double> right_;
};

BasisSet build_basis(int degree, const QuadratureRule& rule);

/// Basis with the default rule of p + 1 Gauss points.
BasisSet build_basis(int degree);

} // namespace nlldg
