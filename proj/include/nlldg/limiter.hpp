#pragma once

#include "nlldg/mesh.hpp"

namespace nlldg {

struct LimiterConfig {
  bool enabled = true;
  double m_tvb = 35.0;  ///< TVB constant; threshold is m_tvb * dx^2
};

double minmod1(double a, double b, double c) noexcept;

/// Returns a when |a| <= m_tvb dx^2, otherwise minmod1(a, b, c).
double minmod2(double a, double b, double c, double m_tvb, double dx) noexcept;

/// Generalized (TVB) slope limiter. A cell whose traces survive the
/// minmod2 test is left untouched; any other cell is replaced by
/// avg + s xi, with s = minmod2 of the slope of its L2 projection onto
/// linears against the neighbouring average differences. Ghost averages on a
/// frozen mesh are the ghost values. Returns the number of modified cells.
int apply_gsl(SolutionField& field, const LimiterConfig& config, const GhostValues& ghosts = {});

} // namespace nlldg
