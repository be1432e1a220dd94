#include "nlldg/ldg_operator.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "nlldg/errors.hpp"

namespace nlldg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// y = A x for a row-major square matrix of size m.
inline void matvec(const double* a, const double* x, double* y, int m) {
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += a[i * m + j] * x[j];
    y[i] = s;
  }
}

} // namespace

ElementMatrices assemble_reference_matrices(const BasisSet& basis, double dx) {
  const int m = basis.size();
  const QuadratureRule& rule = basis.rule();
  assert(rule.size() >= basis.degree() + 1);

  ElementMatrices mat;
  mat.size = m;
  mat.mass = Eigen::MatrixXd::Zero(m, m);
  mat.convection = Eigen::MatrixXd::Zero(m, m);
  for (int g = 0; g < rule.size(); ++g) {
    const double w = rule.weights[g];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        mat.mass(i, j) += 0.5 * dx * w * basis.at_rule(g, i) * basis.at_rule(g, j);
        mat.convection(i, j) += w * basis.derivative_at_rule(g, i) * basis.at_rule(g, j);
      }
    }
  }
  mat.mass_factor.compute(mat.mass);
  if (mat.mass_factor.info() != Eigen::Success) {
    throw std::logic_error("reference mass matrix is not positive definite");
  }
  const Eigen::MatrixXd inv = mat.mass_factor.solve(Eigen::MatrixXd::Identity(m, m));
  mat.mass_inverse.resize(m * m);
  mat.convection_flat.resize(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      mat.mass_inverse[i * m + j] = inv(i, j);
      mat.convection_flat[i * m + j] = mat.convection(i, j);
    }
  }
  return mat;
}

void compute_sigma(const SolutionField& u, const ElementMatrices& matrices,
                   const GhostValues& ghosts, SolutionField& sigma) {
  const int n = u.cells();
  const int m = matrices.size;
  const bool periodic = u.mesh().bc() == BoundaryMode::periodic;
  std::vector<double> rhs(m);
  for (int k = 0; k < n; ++k) {
    const double* uk = u.cell(k);
    matvec(matrices.convection_flat.data(), uk, rhs.data(), m);
    for (int i = 0; i < m; ++i) rhs[i] = -rhs[i];
    const double downwind = k + 1 < n ? u.left_trace(k + 1) : (periodic ? u.left_trace(0) : ghosts.right);
    rhs[0] -= uk[0];
    rhs[m - 1] += downwind;
    matvec(matrices.mass_inverse.data(), rhs.data(), sigma.cell(k), m);
  }
}

void compute_rhs(const SolutionField& u, const NonlocalValues& r, const ElementMatrices& matrices,
                 const ModelParams& params, const GhostValues& ghosts, SolutionField& dudt) {
  const int n = u.cells();
  const int m = matrices.size;
  const BasisSet& basis = u.basis();
  const QuadratureRule& rule = basis.rule();
  const int ng = rule.size();
  const bool periodic = u.mesh().bc() == BoundaryMode::periodic;

  // Interface j sits between cells j - 1 and j.
  std::vector<double> flux(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double left = j > 0 ? u.right_trace(j - 1) : (periodic ? u.right_trace(n - 1) : ghosts.left);
    const double right = j < n ? u.left_trace(j) : (periodic ? u.left_trace(0) : ghosts.right);
    const double rr = r.interfaces[j];
    if (r.interfaces_left.empty()) {
      flux[j] = numerical_flux_Q(left, right, rr, interface_alpha(params, rr));
    } else {
      const double rl = r.interfaces_left[j];
      const double alpha = std::max(interface_alpha(params, rl), interface_alpha(params, rr));
      flux[j] = 0.5 * (demand(left) * velocity(rl) + demand(right) * velocity(rr) +
                       alpha * (left - right));
    }
  }

  std::vector<double> rhs(m);
  for (int k = 0; k < n; ++k) {
    const double* uk = u.cell(k);
    for (int i = 0; i < m; ++i) rhs[i] = 0.0;
    for (int g = 0; g < ng; ++g) {
      double ug = 0.0;
      for (int i = 0; i < m; ++i) ug += uk[i] * basis.at_rule(g, i);
      const double q = rule.weights[g] * flux_qF(ug, r.volume[k * ng + g]);
      for (int i = 0; i < m; ++i) rhs[i] += q * basis.derivative_at_rule(g, i);
    }
    rhs[0] += flux[k];
    rhs[m - 1] -= flux[k + 1];
    matvec(matrices.mass_inverse.data(), rhs.data(), dudt.cell(k), m);
  }
}

LdgOperator::LdgOperator(std::shared_ptr<const Mesh> mesh, std::shared_ptr<const BasisSet> basis,
                         ModelParams params, GhostValues ghosts, int segment_points)
    : mesh_(std::move(mesh)),
      basis_(std::move(basis)),
      params_(params),
      ghosts_(ghosts),
      matrices_(assemble_reference_matrices(*basis_, mesh_->dx())),
      sigma_(mesh_, basis_) {
  validate(params_);
  if (params_.nonlocal()) plan_.emplace(*mesh_, *basis_, params_, segment_points);
}

void LdgOperator::local_values(const SolutionField& u) {
  // gamma = 0: R is rho_hat itself, taken on both sides of every interface.
  const int n = u.cells();
  const int m = basis_->size();
  const int ng = basis_->rule().size();
  const bool periodic = mesh_->bc() == BoundaryMode::periodic;
  const bool diffusive = params_.diffusive();
  const double kappa = params_.kappa;

  nonlocal_.interfaces.resize(n + 1);
  nonlocal_.interfaces_left.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    double uv = ghosts_.right;
    double sv = 0.0;
    if (j < n || periodic) {
      const int c = j < n ? j : 0;
      uv = u.left_trace(c);
      sv = diffusive ? sigma_.left_trace(c) : 0.0;
    }
    nonlocal_.interfaces[j] = convolution_integrand(uv, sv, kappa, params_.integrand);
    uv = ghosts_.left;
    sv = 0.0;
    if (j > 0 || periodic) {
      const int c = j > 0 ? j - 1 : n - 1;
      uv = u.right_trace(c);
      sv = diffusive ? sigma_.right_trace(c) : 0.0;
    }
    nonlocal_.interfaces_left[j] = convolution_integrand(uv, sv, kappa, params_.integrand);
  }
  nonlocal_.volume.resize(static_cast<std::size_t>(n) * ng);
  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < ng; ++g) {
      double uv = 0.0;
      double sv = 0.0;
      for (int i = 0; i < m; ++i) {
        uv += u(k, i) * basis_->at_rule(g, i);
        if (diffusive) sv += sigma_(k, i) * basis_->at_rule(g, i);
      }
      nonlocal_.volume[k * ng + g] = convolution_integrand(uv, sv, kappa, params_.integrand);
    }
  }
}

void LdgOperator::apply(const SolutionField& u, SolutionField& dudt) {
  const bool timed = timers_.enabled;
  if (params_.diffusive()) {
    const auto start = timed ? Clock::now() : Clock::time_point{};
    compute_sigma(u, matrices_, ghosts_, sigma_);
    if (timed) timers_.diffusion += seconds_since(start);
  }
  if (plan_) {
    const auto start = timed ? Clock::now() : Clock::time_point{};
    plan_->evaluate(u, params_.diffusive() ? &sigma_ : nullptr, ghosts_, nonlocal_);
    if (timed) timers_.nonlocal += seconds_since(start);
  } else {
    local_values(u);
  }
  compute_rhs(u, nonlocal_, matrices_, params_, ghosts_, dudt);
  dudt.set_time(u.time());
}

} // namespace nlldg
