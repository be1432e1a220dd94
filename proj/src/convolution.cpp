#include "nlldg/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlldg/errors.hpp"

namespace nlldg {

namespace {

constexpr double piece_tolerance = 1e-12;
constexpr double sample_match_tolerance = 1e-13;

} // namespace

ConvolutionPlan::ConvolutionPlan(const Mesh& mesh, const BasisSet& basis,
                                 const ModelParams& params, int segment_points)
    : cells_(mesh.cells()),
      degree_(basis.degree()),
      volume_points_(basis.rule().size()),
      segment_points_(segment_points > 0 ? segment_points : basis.degree() + 1),
      dx_(mesh.dx()),
      gamma_(params.gamma),
      kappa_(params.kappa),
      integrand_(params.integrand),
      bc_(mesh.bc()),
      segment_rule_(gauss_legendre(segment_points_)) {
  if (!(gamma_ > 0.0)) throw ConfigError("convolution plan requires gamma > 0");

  // Block 0 is the whole reference cell.
  sample_for(-1.0, 1.0);

  stencils_.push_back(build_stencil(-1.0));
  for (int g = 0; g < volume_points_; ++g) {
    stencils_.push_back(build_stencil(basis.rule().points[g]));
  }
  // Register every sample first so the per-cell stride is final.
  for (const Stencil& st : stencils_) {
    for (const Piece& piece : st.pieces) sample_for(piece.a, piece.b);
  }

  const int np = basis.size();
  sample_basis_.resize(sample_points_.size() * np);
  for (std::size_t s = 0; s < sample_points_.size(); ++s) {
    basis.values_at(sample_points_[s], sample_basis_.data() + s * np);
  }

  const int q = segment_points_;
  const int partials = partial_count();
  for (Stencil& st : stencils_) {
    for (const Piece& piece : st.pieces) {
      const int block = find_block(piece.a, piece.b);
      const bool whole = block == 0;
      const int offset = whole ? piece.cell_offset * q : piece.cell_offset * partials + block - q;
      const int weight_begin = static_cast<int>(st.weights.size());
      if (!st.terms.empty() && whole && st.terms.back().whole &&
          st.terms.back().offset + st.terms.back().count == offset) {
        st.terms.back().count += q;
      } else {
        st.terms.push_back({whole, offset, weight_begin, q});
      }
      const double half = 0.5 * (piece.b - piece.a);
      const double mid = 0.5 * (piece.a + piece.b);
      for (int j = 0; j < q; ++j) {
        const double xi = mid + half * segment_rule_.points[j];
        const double distance = (piece.cell_offset + 0.5 * (xi - st.start)) * dx_;
        st.weights.push_back(0.5 * dx_ * half * segment_rule_.weights[j] *
                             kernel_eval(std::min(distance, gamma_), gamma_));
      }
      max_offset_ = std::max(max_offset_, piece.cell_offset);
    }
  }
}

ConvolutionPlan::Stencil ConvolutionPlan::build_stencil(double start_xi) {
  Stencil st;
  st.start = start_xi;
  const double start = 0.5 * (start_xi + 1.0);
  double end = start + gamma_ / dx_;
  const double nearest = std::round(end);
  if (std::abs(end - nearest) < piece_tolerance * std::max(1.0, end)) end = nearest;

  for (int d = 0; d < end; ++d) {
    const double a = std::max(start, static_cast<double>(d)) - d;
    const double b = std::min(end, d + 1.0) - d;
    if (b - a <= piece_tolerance) continue;
    const double ref_a = a == 0.0 ? -1.0 : 2.0 * a - 1.0;
    const double ref_b = b == 1.0 ? 1.0 : 2.0 * b - 1.0;
    st.pieces.push_back({d, ref_a, ref_b});
  }
  return st;
}

int ConvolutionPlan::sample_for(double a, double b) {
  for (std::size_t i = 0; i < sample_intervals_.size(); ++i) {
    const auto& [sa, sb] = sample_intervals_[i];
    if (std::abs(sa - a) < sample_match_tolerance && std::abs(sb - b) < sample_match_tolerance) {
      return static_cast<int>(i) * segment_points_;
    }
  }
  const int block = static_cast<int>(sample_intervals_.size()) * segment_points_;
  sample_intervals_.emplace_back(a, b);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int j = 0; j < segment_points_; ++j) {
    sample_points_.push_back(mid + half * segment_rule_.points[j]);
  }
  return block;
}

int ConvolutionPlan::find_block(double a, double b) const {
  for (std::size_t i = 0; i < sample_intervals_.size(); ++i) {
    const auto& [sa, sb] = sample_intervals_[i];
    if (std::abs(sa - a) < sample_match_tolerance && std::abs(sb - b) < sample_match_tolerance) {
      return static_cast<int>(i) * segment_points_;
    }
  }
  throw std::logic_error("convolution plan: unregistered piece");
}

int ConvolutionPlan::segments_per_query(QueryKind kind, int g) const {
  const int idx = kind == QueryKind::interface ? 0 : 1 + g;
  return static_cast<int>(stencils_.at(idx).pieces.size());
}

std::vector<PlanSegment> ConvolutionPlan::segments(QueryKind kind, int k, int g) const {
  const Stencil& st = stencils_.at(kind == QueryKind::interface ? 0 : 1 + g);
  std::vector<PlanSegment> out;
  const int q = segment_points_;
  std::size_t entry = 0;
  for (const Piece& piece : st.pieces) {
    PlanSegment seg;
    seg.cell = k + piece.cell_offset;
    const double x0 = (k + piece.cell_offset) * dx_;
    seg.begin = x0 + 0.5 * (piece.a + 1.0) * dx_;
    seg.end = x0 + 0.5 * (piece.b + 1.0) * dx_;
    const int block = find_block(piece.a, piece.b);
    for (int j = 0; j < q; ++j, ++entry) {
      seg.points.push_back(x0 + 0.5 * (sample_points_[block + j] + 1.0) * dx_);
      seg.weights.push_back(st.weights[entry]);
    }
    out.push_back(std::move(seg));
  }
  return out;
}

void ConvolutionPlan::evaluate(const SolutionField& u, const SolutionField* sigma,
                               const GhostValues& ghosts, NonlocalValues& out) const {
  const int n = cells_;
  const int np = degree_ + 1;
  const int ns = sample_count();
  const int rows = n + max_offset_ + 1;
  const bool use_sigma = kappa_ != 0.0;
  if (use_sigma && sigma == nullptr) {
    throw ConfigError("convolution with kappa != 0 needs the gradient field");
  }

  const int q = segment_points_;
  const int partials = partial_count();
  out.samples.resize(static_cast<std::size_t>(rows) * ns);
  double* whole = out.samples.data();
  double* partial = whole + static_cast<std::size_t>(rows) * q;
  for (int k = 0; k < n; ++k) {
    const double* uk = u.cell(k);
    const double* sk = use_sigma ? sigma->cell(k) : nullptr;
    for (int s = 0; s < ns; ++s) {
      const double* phi = sample_basis_.data() + s * np;
      double uv = 0.0;
      for (int i = 0; i < np; ++i) uv += uk[i] * phi[i];
      double value = uv;
      if (use_sigma) {
        double sv = 0.0;
        for (int i = 0; i < np; ++i) sv += sk[i] * phi[i];
        value = convolution_integrand(uv, sv, kappa_, integrand_);
      }
      if (s < q) {
        whole[static_cast<std::size_t>(k) * q + s] = value;
      } else {
        partial[static_cast<std::size_t>(k) * partials + s - q] = value;
      }
    }
  }
  if (bc_ == BoundaryMode::periodic) {
    for (int c = n; c < rows; ++c) {
      std::copy_n(whole + static_cast<std::size_t>(c % n) * q, q,
                  whole + static_cast<std::size_t>(c) * q);
      std::copy_n(partial + static_cast<std::size_t>(c % n) * partials, partials,
                  partial + static_cast<std::size_t>(c) * partials);
    }
  } else {
    // Ghost region is constant with zero gradient.
    const double ghost = convolution_integrand(ghosts.right, 0.0, kappa_, integrand_);
    std::fill(whole + static_cast<std::size_t>(n) * q, whole + static_cast<std::size_t>(rows) * q,
              ghost);
    std::fill(partial + static_cast<std::size_t>(n) * partials,
              partial + static_cast<std::size_t>(rows) * partials, ghost);
  }

  auto apply = [whole, partial, q, partials](const Stencil& st, int k) {
    const double* wbase = whole + static_cast<std::size_t>(k) * q;
    const double* pbase = partial + static_cast<std::size_t>(k) * partials;
    double sum = 0.0;
    for (const Term& t : st.terms) {
      const double* x = (t.whole ? wbase : pbase) + t.offset;
      const double* w = st.weights.data() + t.weight_begin;
      // Four independent accumulators; fixed order keeps results bitwise reproducible.
      double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
      int j = 0;
      for (; j + 4 <= t.count; j += 4) {
        a0 += w[j] * x[j];
        a1 += w[j + 1] * x[j + 1];
        a2 += w[j + 2] * x[j + 2];
        a3 += w[j + 3] * x[j + 3];
      }
      for (; j < t.count; ++j) a0 += w[j] * x[j];
      sum += (a0 + a1) + (a2 + a3);
    }
    return sum;
  };

  out.interfaces_left.clear();
  out.interfaces.resize(n + 1);
  for (int k = 0; k <= n; ++k) out.interfaces[k] = apply(stencils_[0], k);

  const int ng = volume_points_;
  out.volume.resize(static_cast<std::size_t>(n) * ng);
  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < ng; ++g) out.volume[k * ng + g] = apply(stencils_[1 + g], k);
  }
}

void eval_R(const ConvolutionPlan& plan, const SolutionField& u, const SolutionField* sigma,
            const GhostValues& ghosts, NonlocalValues& out) {
  plan.evaluate(u, sigma, ghosts, out);
}

} // namespace nlldg
