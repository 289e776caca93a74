#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "antichain/measure.hpp"
#include "antichain/real_point.hpp"
#include "antichain/surface.hpp"

namespace antichain {

// A sampled value f(a) of an order-reversing function at a base point a.
struct MonotoneSample {
  std::vector<double> base;
  double value = 0.0;
};

// inf { f(a) : a <= x }, with the empty infimum taken as 1.
double monotone_extension(std::span<const MonotoneSample> samples, std::span<const double> x);

// The node samples of a tabulated surface.
std::vector<MonotoneSample> tabulated_samples(const TabulatedSurface& surface);

struct MeasureOptions {
  double abs_tol = 0.0;  // 0 picks 1e-6 for n = 2 and 1e-3 above
  std::size_t max_intervals = 4000;
  bool force_quadrature = false;  // integrate even where a closed form exists
  unsigned threads = 0;
};

// (n-1)-dimensional measure of the graph.
MeasureEstimate surface_measure(const MonotoneGraphSurface& surface, const MeasureOptions& options = {});

// Measure of the projection deleting `axis` (0-based); axis n-1 gives the base.
MeasureEstimate projection_measure(const MonotoneGraphSurface& surface, std::size_t axis,
                                   const MeasureOptions& options = {});

struct InequalityReport {
  MeasureEstimate surface;
  std::vector<MeasureEstimate> projections;
  double left = 0.0;
  double right = 0.0;
  double tolerance = 0.0;  // summed error bounds
  bool passes = false;     // left <= right + tolerance
  bool within_n = false;   // left <= n + tolerance
};

InequalityReport verify_projection_inequality(const MonotoneGraphSurface& surface,
                                              const MeasureOptions& options = {});

// P(U_1 + ... + U_n <= t) for independent uniforms.
double simplex_cdf(std::size_t n, double t);

// Volume of { x in [0,1]^n : (n-c)/2 <= sum x_i < (n+c)/2 }, 0 <= c <= n.
double slab_volume(std::size_t n, double c);

class ShearParams {
 public:
  // Throws InvalidArgument unless 0 < epsilon < 1/(2n).
  ShearParams(std::size_t n, double epsilon);

  std::size_t n() const { return n_; }
  double epsilon() const { return epsilon_; }
  // L = 1 / sqrt(1 - 2 n epsilon).
  double lipschitz() const;

 private:
  std::size_t n_;
  double epsilon_;
};

// x_i - epsilon S(x), S(x) = sum x_j.
RealPoint shear(const RealPoint& x, const ShearParams& params);
RealPoint shear_inverse(const RealPoint& y, const ShearParams& params);

enum class LipschitzMap { ShearInverse, SkewInverse2D };

const char* to_string(LipschitzMap map);

struct LipschitzReport {
  double max_ratio = 0.0;
  std::size_t ratios = 0;  // pairs that contributed
  bool within_bound = true;
};

// max |map(a) - map(b)| / |a - b| over the given pairs; coincident pairs are skipped.
LipschitzReport lipschitz_ratio(const std::function<RealPoint(const RealPoint&)>& map,
                                std::span<const std::pair<RealPoint, RealPoint>> pairs, double bound);

// Random pairs in [0,1]^n through the inverse shear.
LipschitzReport lipschitz_sample_check(const ShearParams& params, double bound, std::size_t pairs,
                                       std::uint64_t seed);

// Random pairs of graph points of a planar surface lying on the same side of
// the diagonal, compared with the distance of their skewed projections.
LipschitzReport lipschitz_sample_check(const MonotoneGraphSurface& surface, double bound,
                                       std::size_t pairs, std::uint64_t seed);

struct SkewReport {
  MeasureEstimate surface;
  MeasureEstimate delta1;  // image of the part with x <= f(x)
  MeasureEstimate delta2;  // image of the part with x >= f(x)
  double delta_sum = 0.0;
  double crossing = 0.0;   // x with f(x) = x, clamped to [0, 1]
  double tolerance = 0.0;
  bool passes = false;     // surface <= delta_sum + tolerance
};

// Planar surfaces only; throws InvalidArgument otherwise or when the graph
// is not order-reversing.
SkewReport skew_measures_2d(const MonotoneGraphSurface& surface, double tolerance = 1e-4,
                            const MeasureOptions& options = {});

struct StaircasePolyline {
  std::vector<RealPoint> vertices;  // empty when not requested
  double length = 0.0;
};

// Graph of x -> 1 - C_k(x) for the depth-k approximation C_k of the
// middle-thirds staircase. Vertices are produced up to depth 24.
StaircasePolyline singular_staircase(int depth, bool with_vertices = true);

// 1 - (2/3)^k + sqrt(1 + (4/9)^k).
double staircase_length(int depth);

}  // namespace antichain
