#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>

#include "nlldg/basis.hpp"
#include "nlldg/mesh.hpp"
#include "nlldg/physics.hpp"

namespace nlldg::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::shared_ptr<const Mesh> make_mesh(int n, BoundaryMode bc = BoundaryMode::periodic,
                                             double length = 1.0) {
  return std::make_shared<const Mesh>(n, length, bc);
}

inline std::shared_ptr<const BasisSet> make_basis(int p) {
  return std::make_shared<const BasisSet>(build_basis(p));
}

/// Nodal interpolant of a continuous function.
inline SolutionField interpolate(std::function<double(double)> f, int p, int n,
                                 BoundaryMode bc = BoundaryMode::periodic) {
  return project_initial_condition(continuous_profile(std::move(f)), make_mesh(n, bc),
                                   make_basis(p));
}

/// Independent random nodal values per cell (discontinuous across cells).
inline SolutionField random_field(Rng& rng, int p, int n, double lo, double hi,
                                  BoundaryMode bc = BoundaryMode::periodic) {
  SolutionField f(make_mesh(n, bc), make_basis(p));
  for (double& v : f.coefficients()) v = uniform(rng, lo, hi);
  return f;
}

inline SolutionField random_like(Rng& rng, const SolutionField& like, double lo, double hi) {
  SolutionField f(like.mesh_ptr(), like.basis_ptr());
  for (double& v : f.coefficients()) v = uniform(rng, lo, hi);
  return f;
}

/// Random smooth periodic function: a few low Fourier modes around `mean`.
inline std::function<double(double)> random_smooth(Rng& rng, double mean, double amplitude) {
  const double a1 = uniform(rng, -1, 1), b1 = uniform(rng, -1, 1);
  const double a2 = uniform(rng, -1, 1), b2 = uniform(rng, -1, 1);
  const double scale = amplitude / 4.0;
  return [=](double x) {
    const double w = 2.0 * M_PI * x;
    return mean + scale * (a1 * std::sin(w) + b1 * std::cos(w) + a2 * std::sin(2 * w) +
                           b2 * std::cos(2 * w));
  };
}

/// Composite Simpson on [a, b] with `panels` (rounded up to even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// Lagrange interpolant through values at -cos(pi i / p), evaluated directly
/// from the product formula (no shared code with BasisSet).
inline double lagrange_eval(const double* values, int p, double xi) {
  double sum = 0.0;
  for (int i = 0; i <= p; ++i) {
    const double xi_i = -std::cos(M_PI * i / p);
    double li = 1.0;
    for (int j = 0; j <= p; ++j) {
      if (j == i) continue;
      const double xi_j = -std::cos(M_PI * j / p);
      li *= (xi - xi_j) / (xi_i - xi_j);
    }
    sum += values[i] * li;
  }
  return sum;
}

/// Non-local average R(x) by composite Simpson: the window is split at every
/// cell boundary and `panels` subintervals are shared out by length.
struct SimpsonOracle {
  const SolutionField& u;
  const SolutionField* sigma;
  double gamma;
  double kappa;
  IntegrandMode mode = IntegrandMode::full_rho_hat;
  GhostValues ghosts{};
  int panels = 10000;

  double integrand(long cell, double y) const {
    const Mesh& mesh = u.mesh();
    const long n = mesh.cells();
    if (mesh.bc() == BoundaryMode::frozen && cell >= n) {
      return convolution_integrand(ghosts.right, 0.0, kappa, mode);
    }
    const long c = ((cell % n) + n) % n;
    const double xi = 2.0 * (y - cell * mesh.dx()) / mesh.dx() - 1.0;
    const int p = u.degree();
    const double uv = lagrange_eval(u.cell(static_cast<int>(c)), p, xi);
    const double sv = sigma ? lagrange_eval(sigma->cell(static_cast<int>(c)), p, xi) : 0.0;
    const double r = uv + (mode == IntegrandMode::full_rho_hat ? kappa * uv * (1.0 - uv) : kappa) *
                              std::tanh(sv);
    return r;
  }

  double operator()(double x) const {
    const double dx = u.mesh().dx();
    const double end = x + gamma;
    double total = 0.0;
    double cur = x;
    while (cur < end - 1e-14) {
      const double next = std::min(end, (std::floor(cur / dx + 1e-9) + 1.0) * dx);
      const long cell = static_cast<long>(std::floor(0.5 * (cur + next) / dx));
      const int m = std::max(2, static_cast<int>(std::round(panels * (next - cur) / gamma)));
      total += simpson(
          [&](double y) {
            const double w = (2.0 / gamma) * (1.0 - std::min(y - x, gamma) / gamma);
            return w * integrand(cell, y);
          },
          cur, next, m);
      cur = next;
    }
    return total;
  }
};

} // namespace nlldg::test
