#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "nlldg/basis.hpp"

namespace nlldg {

enum class BoundaryMode { periodic, frozen };

std::string to_string(BoundaryMode mode);
BoundaryMode parse_boundary_mode(const std::string& text);

/// Which one-sided limit to take at a point where data may jump.
enum class Side { left, right };

/// Uniform partition of [0, length] into n cells. Cell k (0-based) spans
/// [x_k, x_{k+1}] with x_k = length * k / n.
class Mesh {
public:
  Mesh(int cells, double length = 1.0, BoundaryMode bc = BoundaryMode::periodic);

  int cells() const noexcept { return cells_; }
  double length() const noexcept { return length_; }
  double dx() const noexcept { return dx_; }
  BoundaryMode bc() const noexcept { return bc_; }

  double boundary(int k) const noexcept { return length_ * k / cells_; }
  double center(int k) const noexcept { return 0.5 * (boundary(k) + boundary(k + 1)); }
  /// Physical position of a reference coordinate xi in [-1, 1] of cell k.
  double position(int k, double xi) const noexcept {
    return boundary(k) + 0.5 * (xi + 1.0) * dx_;
  }

private:
  int cells_;
  double length_;
  double dx_;
  BoundaryMode bc_;
};

/// Initial profile with access to one-sided limits at jump points.
using Profile = std::function<double(double x, Side side)>;

/// Wraps a continuous function as a Profile.
Profile continuous_profile(std::function<double(double)> f);

/// Piecewise-polynomial nodal field: value(k, i) is the coefficient on
/// phi_i in cell k, which equals the field at node i of cell k.
class SolutionField {
public:
  SolutionField(std::shared_ptr<const Mesh> mesh, std::shared_ptr<const BasisSet> basis,
                double time = 0.0);

  const Mesh& mesh() const noexcept { return *mesh_; }
  const BasisSet& basis() const noexcept { return *basis_; }
  std::shared_ptr<const Mesh> mesh_ptr() const noexcept { return mesh_; }
  std::shared_ptr<const BasisSet> basis_ptr() const noexcept { return basis_; }

  int cells() const noexcept { return mesh_->cells(); }
  int degree() const noexcept { return basis_->degree(); }
  int nodes_per_cell() const noexcept { return basis_->size(); }

  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  double& operator()(int k, int i) { return coeffs_[k * nodes_per_cell() + i]; }
  double operator()(int k, int i) const { return coeffs_[k * nodes_per_cell() + i]; }

  double* cell(int k) { return coeffs_.data() + k * nodes_per_cell(); }
  const double* cell(int k) const { return coeffs_.data() + k * nodes_per_cell(); }

  std::vector<double>& coefficients() noexcept { return coeffs_; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

  /// Left (u_0^k) and right (u_p^k) traces of cell k.
  double left_trace(int k) const { return (*this)(k, 0); }
  double right_trace(int k) const { return (*this)(k, degree()); }

  /// Same mesh, basis and (bitwise) coefficients.
  bool same_values(const SolutionField& other) const;

private:
  std::shared_ptr<const Mesh> mesh_;
  std::shared_ptr<const BasisSet> basis_;
  std::vector<double> coeffs_;
  double time_;
};

/// Nodal interpolation. A node on the left boundary of a cell samples the
/// right limit of the profile, a node on the right boundary the left limit.
SolutionField project_initial_condition(const Profile& profile,
                                        std::shared_ptr<const Mesh> mesh,
                                        std::shared_ptr<const BasisSet> basis);

/// Values in the ghost region of a frozen mesh: profile(0) and profile(l).
struct GhostValues {
  double left = 0.0;
  double right = 0.0;
};

GhostValues frozen_ghosts(const Profile& profile, const Mesh& mesh);

/// Point evaluation. At an interior cell boundary the trace on `side` is
/// returned (right cell by default). Outside [0, l]: periodic meshes wrap,
/// frozen meshes return the ghost value.
double evaluate(const SolutionField& field, double x, Side side = Side::right,
                const GhostValues& ghosts = {});

/// Value of cell k at reference coordinate xi.
double evaluate_local(const SolutionField& field, int k, double xi);

double cell_average(const SolutionField& field, int k);
double total_mass(const SolutionField& field);

double min_value(const SolutionField& field);
double max_value(const SolutionField& field);

/// Total variation of the nodal values in ascending x order.
double nodal_total_variation(const SolutionField& field);

/// CSV with header `x,k,rho`, one row per nodal point in ascending order.
/// Shared boundary nodes appear once per adjacent cell.
void write_snapshot_csv(std::ostream& out, const SolutionField& field);

} // namespace nlldg
