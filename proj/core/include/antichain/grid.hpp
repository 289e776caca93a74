#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "antichain/lattice.hpp"
#include "antichain/measure.hpp"
#include "antichain/real_point.hpp"
#include "antichain/surface.hpp"

namespace antichain {

// The unit interval is cut into I_1 = [0, 1/m), ..., I_{m-1}, I_m = [(m-1)/m, 1];
// a multi-index d in [1, m]^n names the cube I_{d_1} x ... x I_{d_n}.
struct GridCover {
  Coord m = 1;
  std::size_t dim = 1;
  LatticePointSet indices{1};  // components in [1, m]
  bool exact = true;           // false when produced by sampling (may miss cubes)

  std::size_t count() const { return indices.size(); }
};

// Membership oracle checked at a per-cube lattice of sample points.
struct PredicateSampler {
  std::size_t dim = 1;
  std::function<bool(std::span<const double>)> contains;
  std::size_t samples_per_axis = 4;
};

using SetSampler = std::variant<RealPointSet, MonotoneGraphSurface, PredicateSampler>;

std::size_t sampler_dim(const SetSampler& sampler);

// Throws InvalidArgument for coordinates outside [0, 1].
LatticePoint cube_index(std::span<const double> x, Coord m);

// Indices of all cubes meeting the set. Exact for point lists and for every
// surface family; sampled (and flagged inexact) for predicates. Throws
// BudgetExceeded when m^n exceeds `cube_budget`.
GridCover grid_cover(const SetSampler& sampler, Coord m, std::uint64_t cube_budget = 1ull << 28);

// Cover of the projection: deleting an axis commutes with taking cubes.
GridCover project_cover(const GridCover& cover, std::size_t axis);

// alpha_s = pi^(s/2) / (2^s Gamma(s/2 + 1)).
double alpha(double s);
// D = n^((n-1)/2) alpha_{n-1}.
double d_const(std::size_t n);

// alpha_{n-1} |G| (sqrt(n)/m)^(n-1): an upper bound for the
// (n-1)-dimensional Hausdorff content at scale sqrt(n)/m.
MeasureEstimate covering_bound(const GridCover& cover);

// |G| / m^n.
double volume_ratio(const GridCover& cover);

std::vector<double> volume_ratio_curve(const SetSampler& sampler, std::span<const Coord> resolutions);

struct BoxDimensionFit {
  double dimension = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square residual of the log-log fit
  std::vector<std::size_t> counts;
};

// Least-squares slope of log |G_m| against log m.
BoxDimensionFit box_dimension(const SetSampler& sampler, std::span<const Coord> resolutions);

// Covering bound next to D times the summed projection volume ratios
// sum_i |pi_i(G)| / m^(n-1), and next to D n.
struct ChainedBound {
  double cover_bound = 0.0;
  double projection_sum = 0.0;
  double chained_bound = 0.0;  // D * projection_sum
  double dn_bound = 0.0;       // D * n
  bool chain_holds = false;
  bool dn_holds = false;
};

ChainedBound chained_covering_bound(const GridCover& cover);

}  // namespace antichain
