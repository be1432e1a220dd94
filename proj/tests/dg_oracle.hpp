#pragma once

// Independent nodal DG discretisation of the local traffic model, used as a
// reference by the operator and end-to-end tests.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "support.hpp"

namespace nlldg::test {

// Gauss-Legendre tables, written out so the oracle below shares nothing
// with the rule generator.
struct Table {
  std::vector<double> x, w;
};

inline Table gauss_table(int count) {
  switch (count) {
    case 2:
      return {{-0.5773502691896257, 0.5773502691896257}, {1.0, 1.0}};
    case 3:
      return {{-0.7745966692414834, 0.0, 0.7745966692414834},
              {0.5555555555555556, 0.8888888888888888, 0.5555555555555556}};
    case 4:
      return {{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526},
              {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538}};
    default:
      throw std::invalid_argument("no table");
  }
}

inline double lagrange_derivative(int i, int p, double xi) {
  auto node = [p](int j) { return -std::cos(M_PI * j / p); };
  double sum = 0.0;
  for (int m = 0; m <= p; ++m) {
    if (m == i) continue;
    double term = 1.0 / (node(i) - node(m));
    for (int j = 0; j <= p; ++j) {
      if (j == i || j == m) continue;
      term *= (xi - node(j)) / (node(i) - node(j));
    }
    sum += term;
  }
  return sum;
}

inline double lagrange(int i, int p, double xi) {
  std::vector<double> e(p + 1, 0.0);
  e[i] = 1.0;
  return lagrange_eval(e.data(), p, xi);
}

inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const int m = static_cast<int>(b.size());
  for (int c = 0; c < m; ++c) {
    int pivot = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(a[r * m + c]) > std::abs(a[pivot * m + c])) pivot = r;
    }
    for (int j = 0; j < m; ++j) std::swap(a[c * m + j], a[pivot * m + j]);
    std::swap(b[c], b[pivot]);
    for (int r = c + 1; r < m; ++r) {
      const double f = a[r * m + c] / a[c * m + c];
      for (int j = c; j < m; ++j) a[r * m + j] -= f * a[c * m + j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(m);
  for (int r = m - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < m; ++j) s -= a[r * m + j] * x[j];
    x[r] = s / a[r * m + r];
  }
  return x;
}

// Standard nodal DG right-hand side for u_t + f(u)_x = 0 with
// f(u) = u (1 - u)^2 and the Lax-Friedrichs flux with alpha = 1. On a frozen
// mesh the outer traces are the ghost values.
inline std::vector<double> standard_dg_rhs(const SolutionField& u, const GhostValues& ghosts = {}) {
  const int p = u.degree();
  const int n = u.cells();
  const double dx = u.mesh().dx();
  const Table q = gauss_table(p + 1);
  auto f = [](double v) { return v * (1.0 - v) * (1.0 - v); };

  std::vector<double> mass((p + 1) * (p + 1), 0.0);
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= p; ++j) {
      for (std::size_t g = 0; g < q.x.size(); ++g) {
        mass[i * (p + 1) + j] += 0.5 * dx * q.w[g] * lagrange(i, p, q.x[g]) * lagrange(j, p, q.x[g]);
      }
    }
  }
  auto flux = [&](int j) {
    const bool frozen = u.mesh().bc() == BoundaryMode::frozen;
    const double ul = frozen && j == 0 ? ghosts.left : u.right_trace((j - 1 + n) % n);
    const double ur = frozen && j == n ? ghosts.right : u.left_trace(j % n);
    return 0.5 * (f(ul) + f(ur)) + 0.5 * (ul - ur);
  };
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    std::vector<double> b(p + 1, 0.0);
    for (std::size_t g = 0; g < q.x.size(); ++g) {
      const double ug = lagrange_eval(u.cell(k), p, q.x[g]);
      for (int i = 0; i <= p; ++i) b[i] += q.w[g] * f(ug) * lagrange_derivative(i, p, q.x[g]);
    }
    b[0] += flux(k);
    b[p] -= flux(k + 1);
    const auto x = solve_dense(mass, b);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

} // namespace nlldg::test
