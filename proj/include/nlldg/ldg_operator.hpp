#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nlldg/basis.hpp"
#include "nlldg/convolution.hpp"
#include "nlldg/mesh.hpp"
#include "nlldg/physics.hpp"

namespace nlldg {

/// Cell matrices for the uniform mesh; one set serves every cell.
struct ElementMatrices {
  Eigen::MatrixXd mass;        ///< M_ij = int phi_i phi_j dx on a cell of width dx
  Eigen::MatrixXd convection;  ///< C_ij = int (d phi_i / dx) phi_j dx (independent of dx)
  Eigen::LLT<Eigen::MatrixXd> mass_factor;
  /// M^{-1} from the Cholesky factor, row-major, for the per-cell products.
  std::vector<double> mass_inverse;
  std::vector<double> convection_flat;  ///< row-major copy of C
  int size = 0;
};

ElementMatrices assemble_reference_matrices(const BasisSet& basis, double dx);

/// sigma^k = M^{-1} (-C u^k + S1^k) with S1 = (-u_0^k, 0, ..., 0, u_0^{k+1}).
/// On a frozen mesh u_0^{n+1} is the right ghost value.
void compute_sigma(const SolutionField& u, const ElementMatrices& matrices,
                   const GhostValues& ghosts, SolutionField& sigma);

/// du^k/dt = M^{-1} (K^k - S2^k) given the non-local averages at every
/// interface and volume quadrature point.
void compute_rhs(const SolutionField& u, const NonlocalValues& r, const ElementMatrices& matrices,
                 const ModelParams& params, const GhostValues& ghosts, SolutionField& dudt);

/// Accumulated wall-clock seconds spent in the diffusion (sigma solve) and
/// non-local (convolution) parts of the operator.
struct OperatorTimers {
  bool enabled = false;
  double diffusion = 0.0;
  double nonlocal = 0.0;

  void reset() noexcept { diffusion = nonlocal = 0.0; }
};

/// Full semi-discrete operator: sigma solve, non-local averages, RHS.
class LdgOperator {
public:
  LdgOperator(std::shared_ptr<const Mesh> mesh, std::shared_ptr<const BasisSet> basis,
              ModelParams params, GhostValues ghosts = {}, int segment_points = 0);

  void apply(const SolutionField& u, SolutionField& dudt);

  const ModelParams& params() const noexcept { return params_; }
  const ElementMatrices& matrices() const noexcept { return matrices_; }
  const GhostValues& ghosts() const noexcept { return ghosts_; }
  const std::optional<ConvolutionPlan>& plan() const noexcept { return plan_; }

  /// Gradient and non-local averages from the most recent apply().
  const SolutionField& sigma() const noexcept { return sigma_; }
  const NonlocalValues& nonlocal() const noexcept { return nonlocal_; }

  OperatorTimers& timers() noexcept { return timers_; }
  const OperatorTimers& timers() const noexcept { return timers_; }

private:
  void local_values(const SolutionField& u);

  std::shared_ptr<const Mesh> mesh_;
  std::shared_ptr<const BasisSet> basis_;
  ModelParams params_;
  GhostValues ghosts_;
  ElementMatrices matrices_;
  std::optional<ConvolutionPlan> plan_;
  SolutionField sigma_;
  NonlocalValues nonlocal_;
  OperatorTimers timers_;
};

} // namespace nlldg
