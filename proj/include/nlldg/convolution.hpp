#pragma once

#include <vector>

#include "nlldg/basis.hpp"
#include "nlldg/mesh.hpp"
#include "nlldg/physics.hpp"

namespace nlldg {

/// Where a non-local average is requested: at cell interface x_k, or at the
/// g-th volume quadrature point of cell k.
enum class QueryKind { interface, volume };

/// One piece of the window [x, x + gamma] restricted to a single cell, with
/// physical quadrature points and kernel-weighted weights. `cell` is the
/// unwrapped index: values >= n are ghost cells (frozen) or wrap (periodic).
struct PlanSegment {
  int cell = 0;
  double begin = 0.0;
  double end = 0.0;
  std::vector<double> points;
  std::vector<double> weights;
};

/// Non-local averages R at all interfaces (n + 1 values, x_0 .. x_n) and at
/// all volume quadrature points (n * N_G values, cell-major).
struct NonlocalValues {
  std::vector<double> interfaces;
  /// rho_hat of the left trace at each interface. Only the local model
  /// (gamma = 0) fills it; compute_rhs then evaluates the flux per side.
  std::vector<double> interfaces_left;
  std::vector<double> volume;
  /// Scratch: integrand tabulated at the per-cell sample points.
  std::vector<double> samples;
};

/// Precomputed quadrature for R(x) = int_x^{x+gamma} K(y - x) rho_hat(y) dy.
///
/// The mesh is uniform, so the window of a query splits into the same
/// sequence of (cell offset, local sub-interval) pieces for every cell; only
/// the query's position inside its cell matters. The plan stores one stencil
/// per query type (interface, or volume point g) over a per-cell set of
/// sample points. Whole-cell pieces share the same samples, partial pieces
/// get their own. Evaluation tabulates rho_hat at the samples of every cell
/// (O(n)) and then forms the kernel-weighted sums (O(n^2)). Whole-cell
/// samples are stored contiguously across cells, so the run of whole cells
/// inside a window is a single dense dot product.
class ConvolutionPlan {
public:
  /// `segment_points` is the Gauss rule size on each piece; 0 selects p + 1.
  ConvolutionPlan(const Mesh& mesh, const BasisSet& basis, const ModelParams& params,
                  int segment_points = 0);

  int cells() const noexcept { return cells_; }
  int volume_points() const noexcept { return volume_points_; }
  int sample_count() const noexcept { return static_cast<int>(sample_points_.size()); }
  int segment_points() const noexcept { return segment_points_; }
  BoundaryMode bc() const noexcept { return bc_; }
  double gamma() const noexcept { return gamma_; }

  /// Number of pieces the window of a query is split into.
  int segments_per_query(QueryKind kind, int g = 0) const;

  /// Explicit segments of the query at interface k (k = 0..n) or at volume
  /// point g of cell k.
  std::vector<PlanSegment> segments(QueryKind kind, int k, int g = 0) const;

  /// Evaluate R at every query point. `sigma` may be null when kappa = 0.
  void evaluate(const SolutionField& u, const SolutionField* sigma, const GhostValues& ghosts,
                NonlocalValues& out) const;

private:
  struct Piece {
    int cell_offset;
    double a;  // sub-interval of the reference cell, in [-1, 1]
    double b;
  };
  // Consecutive weights applied to one contiguous stretch of the sample table.
  struct Term {
    bool whole;   // whole-cell table, else partial table
    int offset;   // relative to the query cell's first entry in that table
    int weight_begin;
    int count;
  };
  struct Stencil {
    double start;  // query position as reference coordinate of its cell
    std::vector<Piece> pieces;
    std::vector<Term> terms;  // left to right
    std::vector<double> weights;
  };

  Stencil build_stencil(double start_xi);
  int sample_for(double a, double b);
  int find_block(double a, double b) const;
  int partial_count() const noexcept { return sample_count() - segment_points_; }

  int cells_;
  int degree_;
  int volume_points_;
  int segment_points_;
  double dx_;
  double gamma_;
  double kappa_;
  IntegrandMode integrand_;
  BoundaryMode bc_;
  QuadratureRule segment_rule_;
  std::vector<double> sample_points_;
  std::vector<double> sample_basis_;  // [s * (p + 1) + i]
  std::vector<std::pair<double, double>> sample_intervals_;  // one per block of segment_points_
  std::vector<Stencil> stencils_;  // [0] interface, [1 + g] volume point g
  int max_offset_ = 0;
};

/// R at all query points; thin wrapper over ConvolutionPlan::evaluate.
void eval_R(const ConvolutionPlan& plan, const SolutionField& u, const SolutionField* sigma,
            const GhostValues& ghosts, NonlocalValues& out);

} // namespace nlldg
