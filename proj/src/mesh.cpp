#include "nlldg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nlldg/errors.hpp"

namespace nlldg {

std::string to_string(BoundaryMode mode) {
  return mode == BoundaryMode::periodic ? "periodic" : "frozen";
}

BoundaryMode parse_boundary_mode(const std::string& text) {
  if (text == "periodic") return BoundaryMode::periodic;
  if (text == "frozen") return BoundaryMode::frozen;
  throw ConfigError("unknown boundary mode '" + text + "' (expected periodic|frozen)");
}

Mesh::Mesh(int cells, double length, BoundaryMode bc)
    : cells_(cells), length_(length), dx_(length / cells), bc_(bc) {
  if (cells < 1) throw ConfigError("mesh needs at least one cell");
  if (!(length > 0.0)) throw ConfigError("domain length must be positive");
}

Profile continuous_profile(std::function<double(double)> f) {
  return [f = std::move(f)](double x, Side) { return f(x); };
}

SolutionField::SolutionField(std::shared_ptr<const Mesh> mesh,
                             std::shared_ptr<const BasisSet> basis, double time)
    : mesh_(std::move(mesh)), basis_(std::move(basis)), time_(time) {
  coeffs_.assign(static_cast<std::size_t>(mesh_->cells()) * basis_->size(), 0.0);
}

bool SolutionField::same_values(const SolutionField& other) const {
  return cells() == other.cells() && degree() == other.degree() && coeffs_ == other.coeffs_;
}

SolutionField project_initial_condition(const Profile& profile, std::shared_ptr<const Mesh> mesh,
                                        std::shared_ptr<const BasisSet> basis) {
  SolutionField field(mesh, basis);
  const int p = field.degree();
  const auto& nodes = field.basis().nodes();
  for (int k = 0; k < field.cells(); ++k) {
    for (int i = 0; i <= p; ++i) {
      Side side = Side::right;
      double x = mesh->position(k, nodes[i]);
      if (i == 0) {
        x = mesh->boundary(k);
        side = Side::right;
      } else if (i == p) {
        x = mesh->boundary(k + 1);
        side = Side::left;
      }
      field(k, i) = profile(x, side);
    }
  }
  return field;
}

GhostValues frozen_ghosts(const Profile& profile, const Mesh& mesh) {
  return {profile(0.0, Side::right), profile(mesh.length(), Side::left)};
}

double evaluate_local(const SolutionField& field, int k, double xi) {
  const BasisSet& basis = field.basis();
  const double* u = field.cell(k);
  double v = 0.0;
  for (int i = 0; i < basis.size(); ++i) v += u[i] * basis.value(i, xi);
  return v;
}

double evaluate(const SolutionField& field, double x, Side side, const GhostValues& ghosts) {
  const Mesh& mesh = field.mesh();
  const double l = mesh.length();
  if (mesh.bc() == BoundaryMode::periodic) {
    x = std::fmod(x, l);
    if (x < 0.0) x += l;
  } else {
    if (x < 0.0) return ghosts.left;
    if (x > l) return ghosts.right;
  }
  const int n = mesh.cells();
  double s = x / mesh.dx();
  int k = static_cast<int>(std::floor(s));
  // Exactly on a boundary: pick the cell on the requested side.
  const double nearest = std::round(s);
  if (std::abs(s - nearest) < 1e-12) {
    k = static_cast<int>(nearest);
    if (side == Side::left) k -= 1;
    if (k < 0) k = mesh.bc() == BoundaryMode::periodic ? n - 1 : 0;
    if (k >= n) k = mesh.bc() == BoundaryMode::periodic ? 0 : n - 1;
    const bool at_left_end = static_cast<int>(nearest) == k;
    return at_left_end ? field.left_trace(k) : field.right_trace(k);
  }
  k = std::clamp(k, 0, n - 1);
  const double xi = 2.0 * (x - mesh.boundary(k)) / mesh.dx() - 1.0;
  return evaluate_local(field, k, xi);
}

double cell_average(const SolutionField& field, int k) {
  const BasisSet& basis = field.basis();
  const QuadratureRule& rule = basis.rule();
  const double* u = field.cell(k);
  double sum = 0.0;
  for (int g = 0; g < rule.size(); ++g) {
    double v = 0.0;
    for (int i = 0; i < basis.size(); ++i) v += u[i] * basis.at_rule(g, i);
    sum += rule.weights[g] * v;
  }
  return 0.5 * sum;
}

double total_mass(const SolutionField& field) {
  double mass = 0.0;
  for (int k = 0; k < field.cells(); ++k) mass += cell_average(field, k);
  return mass * field.mesh().dx();
}

double min_value(const SolutionField& field) {
  const auto& c = field.coefficients();
  return *std::min_element(c.begin(), c.end());
}

double max_value(const SolutionField& field) {
  const auto& c = field.coefficients();
  return *std::max_element(c.begin(), c.end());
}

double nodal_total_variation(const SolutionField& field) {
  const auto& c = field.coefficients();
  double tv = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j) tv += std::abs(c[j] - c[j - 1]);
  return tv;
}

void write_snapshot_csv(std::ostream& out, const SolutionField& field) {
  const Mesh& mesh = field.mesh();
  const auto& nodes = field.basis().nodes();
  const auto old_precision = out.precision(17);
  out << "x,k,rho\n";
  for (int k = 0; k < field.cells(); ++k) {
    for (int i = 0; i <= field.degree(); ++i) {
      double x = mesh.position(k, nodes[i]);
      if (i == 0) x = mesh.boundary(k);
      if (i == field.degree()) x = mesh.boundary(k + 1);
      out << x << ',' << k << ',' << field(k, i) << '\n';
    }
  }
  out.precision(old_precision);
}

} // namespace nlldg
