#include "antichain/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "antichain/error.hpp"
#include "antichain/parallel.hpp"
#include "antichain/quadrature.hpp"

namespace antichain {
namespace {

double target_tol(const MeasureOptions& options, std::size_t n) {
  if (options.abs_tol > 0.0) return options.abs_tol;
  return n == 2 ? 1e-6 : 1e-3;
}

QuadratureOptions quad_options(double tol, const MeasureOptions& options) {
  return QuadratureOptions{tol, options.max_intervals};
}

MeasureEstimate closed_form(double value) {
  MeasureEstimate e;
  e.value = value;
  e.method = MeasureMethod::ClosedForm;
  return e;
}

MeasureEstimate from_quadrature(const QuadratureResult& r, double scale = 1.0) {
  MeasureEstimate e;
  e.value = scale * r.value;
  e.error_bound = scale * r.error;
  e.method = MeasureMethod::Quadrature;
  e.converged = r.converged;
  return e;
}

double binomial(std::size_t n, std::size_t k) {
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

// Leb{ x in [0,1]^d : n/2 - 1 <= sum x <= n/2 } for the hyperplane base.
double hyperplane_base(std::size_t n) {
  const double half = static_cast<double>(n) / 2.0;
  return simplex_cdf(n - 1, half) - simplex_cdf(n - 1, half - 1.0);
}

// Leb{ x in [0,1]^d : sum x^p <= 1 }.
double lp_base(std::size_t d, double p) {
  return std::exp(static_cast<double>(d) * std::lgamma(1.0 + 1.0 / p) -
                  std::lgamma(1.0 + static_cast<double>(d) / p));
}

double linear_base(const LinearGraphSurface& s) {
  double total = 0.0;
  for (const auto& box : s.base) total += box.volume();
  return total;
}

QuadratureResult hyperplane_quadrature(std::size_t n, double tol, const MeasureOptions& options) {
  const std::size_t d = n - 1;
  const double half = static_cast<double>(n) / 2.0;
  const double root_n = std::sqrt(static_cast<double>(n));
  SliceLimits limits = [d, half](std::span<const double> prefix) {
    double s = 0.0;
    for (double v : prefix) s += v;
    const double rest = static_cast<double>(d - prefix.size() - 1);
    const double lo = std::max(0.0, half - 1.0 - s - rest);
    const double hi = std::min(1.0, half - s);
    return std::pair{lo, hi};
  };
  return integrate_iterated(d, [root_n](std::span<const double>) { return root_n; }, limits,
                            quad_options(tol, options));
}

QuadratureResult linear_quadrature(const LinearGraphSurface& s, double tol, const MeasureOptions& options) {
  const std::size_t d = s.gradient.size();
  double c2 = 1.0;
  for (double c : s.gradient) c2 += c * c;
  const double density = std::sqrt(c2);
  QuadratureResult total;
  for (const auto& box : s.base) {
    SliceLimits limits = [&box](std::span<const double> prefix) {
      return std::pair{box.lo[prefix.size()], box.hi[prefix.size()]};
    };
    const auto r = integrate_iterated(d, [density](std::span<const double>) { return density; }, limits,
                                      quad_options(tol / static_cast<double>(s.base.size()), options));
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return total;
}

// By symmetry the graph splits into n congruent pieces according to which
// coordinate is largest. The piece where x_n is largest is the graph of f
// over R = { x : max x_i <= f(x) }, a down-set on which x_i / f <= 1.
MeasureEstimate lp_surface(const LpSphereSurface& s, double tol, const MeasureOptions& options) {
  const std::size_t d = s.n - 1;
  const double p = s.p;
  auto inside = [p](std::span<const double> prefix, double t) {
    double sum = std::pow(t, p);
    double top = t;
    for (double v : prefix) {
      sum += std::pow(v, p);
      top = std::max(top, v);
    }
    return sum + std::pow(top, p) <= 1.0;
  };
  SliceLimits limits = [inside](std::span<const double> prefix) {
    const double hi = last_true([&](double t) { return inside(prefix, t); }, 0.0, 1.0);
    return std::pair{0.0, hi};
  };
  auto integrand = [p](std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += std::pow(v, p);
    const double f = std::pow(std::max(0.0, 1.0 - sum), 1.0 / p);
    double acc = 1.0;
    for (double v : x) {
      const double ratio = f > 0.0 ? std::min(1.0, v / f) : 1.0;
      acc += std::pow(ratio, 2.0 * (p - 1.0));
    }
    return std::sqrt(acc);
  };
  const double n = static_cast<double>(s.n);
  return from_quadrature(integrate_iterated(d, integrand, limits, quad_options(tol / n, options)), n);
}

MeasureEstimate tabulated_surface(const TabulatedSurface& s, double tol, const MeasureOptions& options) {
  const std::size_t d = s.dim() - 1;
  const std::size_t nodes = s.nodes();
  const double h = 1.0 / static_cast<double>(nodes - 1);
  if (d == 1) {
    double length = 0.0;
    for (std::size_t j = 0; j + 1 < nodes; ++j) {
      length += std::hypot(h, s.values()[j + 1] - s.values()[j]);
    }
    return closed_form(length);
  }
  // Cell by cell: the interpolant is smooth inside each cell.
  std::size_t cells = 1;
  for (std::size_t j = 0; j < d; ++j) cells *= nodes - 1;
  const double cell_tol = tol / static_cast<double>(cells);
  std::vector<QuadratureResult> parts(cells);
  parallel_for(cells, options.threads, [&](std::size_t c) {
    std::vector<double> lo(d);
    std::size_t rest = c;
    for (std::size_t j = d; j-- > 0;) {
      lo[j] = static_cast<double>(rest % (nodes - 1)) * h;
      rest /= nodes - 1;
    }
    // Sample strictly inside the cell so the gradient uses this cell's nodes.
    SliceLimits limits = [&lo, h](std::span<const double> prefix) {
      return std::pair{lo[prefix.size()], lo[prefix.size()] + h};
    };
    auto integrand = [&s, &lo, h](std::span<const double> x) {
      std::vector<double> y(x.begin(), x.end());
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = std::clamp(y[j], lo[j] + 1e-12 * h, lo[j] + h * (1 - 1e-12));
      double acc = 1.0;
      for (double g : s.gradient(y)) acc += g * g;
      return std::sqrt(acc);
    };
    parts[c] = integrate_iterated(d, integrand, limits, quad_options(cell_tol, options));
  });
  QuadratureResult total;
  for (const auto& r : parts) {
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return from_quadrature(total);
}

// The interpolant decreases along every axis, so the integral of |D_a f| is
// the face difference f(x_a = 0) - f(x_a = 1), integrated exactly by the
// trapezoid rule on the remaining multilinear coordinates.
double tabulated_projection(const TabulatedSurface& s, std::size_t axis) {
  const std::size_t d = s.dim() - 1;
  const std::size_t nodes = s.nodes();
  std::vector<std::size_t> idx(d, 0);
  double total = 0.0;
  const std::size_t count = s.values().size();
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = d; j-- > 0;) {
      idx[j] = rest % nodes;
      rest /= nodes;
    }
    if (idx[axis] != 0) continue;
    double w = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == axis) continue;
      const bool end = idx[j] == 0 || idx[j] == nodes - 1;
      w *= (end ? 0.5 : 1.0) / static_cast<double>(nodes - 1);
    }
    const double top = s.node_value(idx);
    idx[axis] = nodes - 1;
    const double bottom = s.node_value(idx);
    idx[axis] = 0;
    total += w * (top - bottom);
  }
  return total;
}

void require_axis(const MonotoneGraphSurface& surface, std::size_t axis) {
  if (axis >= surface.dim()) {
    throw InvalidArgument("projection axis " + std::to_string(axis) + " out of range for dimension " +
                          std::to_string(surface.dim()));
  }
}

}  // namespace

double monotone_extension(std::span<const MonotoneSample> samples, std::span<const double> x) {
  double best = 1.0;
  bool any = false;
  for (const auto& s : samples) {
    if (s.base.size() != x.size()) throw DimensionMismatch("monotone_extension: sample dimension differs");
    bool below = true;
    for (std::size_t j = 0; j < x.size() && below; ++j) below = s.base[j] <= x[j];
    if (below) {
      best = any ? std::min(best, s.value) : s.value;
      any = true;
    }
  }
  return best;
}

std::vector<MonotoneSample> tabulated_samples(const TabulatedSurface& surface) {
  const std::size_t d = surface.dim() - 1;
  const std::size_t nodes = surface.nodes();
  std::vector<MonotoneSample> out;
  out.reserve(surface.values().size());
  for (std::size_t flat = 0; flat < surface.values().size(); ++flat) {
    MonotoneSample s;
    s.base.resize(d);
    std::size_t rest = flat;
    for (std::size_t j = d; j-- > 0;) {
      s.base[j] = static_cast<double>(rest % nodes) / static_cast<double>(nodes - 1);
      rest /= nodes;
    }
    s.value = surface.values()[flat];
    out.push_back(std::move(s));
  }
  return out;
}

MeasureEstimate surface_measure(const MonotoneGraphSurface& surface, const MeasureOptions& options) {
  const std::size_t n = surface.dim();
  const double tol = target_tol(options, n);
  if (const auto* s = surface.as<HyperplaneSurface>()) {
    if (options.force_quadrature) return from_quadrature(hyperplane_quadrature(s->n, tol, options));
    return closed_form(std::sqrt(static_cast<double>(s->n)) * hyperplane_base(s->n));
  }
  if (const auto* s = surface.as<LinearGraphSurface>()) {
    if (options.force_quadrature) return from_quadrature(linear_quadrature(*s, tol, options));
    double c2 = 1.0;
    for (double c : s->gradient) c2 += c * c;
    return closed_form(std::sqrt(c2) * linear_base(*s));
  }
  if (const auto* s = surface.as<LpSphereSurface>()) return lp_surface(*s, tol, options);
  if (const auto* s = surface.as<TabulatedSurface>()) return tabulated_surface(*s, tol, options);
  return closed_form(staircase_length(surface.as<StaircaseSurface>()->depth));
}

MeasureEstimate projection_measure(const MonotoneGraphSurface& surface, std::size_t axis,
                                   const MeasureOptions&) {
  require_axis(surface, axis);
  const std::size_t n = surface.dim();
  const bool base = axis == n - 1;
  if (const auto* s = surface.as<HyperplaneSurface>()) return closed_form(hyperplane_base(s->n));
  if (const auto* s = surface.as<LpSphereSurface>()) return closed_form(lp_base(s->n - 1, s->p));
  if (const auto* s = surface.as<LinearGraphSurface>()) {
    const double leb = linear_base(*s);
    return closed_form(base ? leb : std::fabs(s->gradient[axis]) * leb);
  }
  if (const auto* s = surface.as<TabulatedSurface>()) {
    return closed_form(base ? 1.0 : tabulated_projection(*s, axis));
  }
  return closed_form(1.0);
}

InequalityReport verify_projection_inequality(const MonotoneGraphSurface& surface,
                                              const MeasureOptions& options) {
  InequalityReport r;
  const std::size_t n = surface.dim();
  r.surface = surface_measure(surface, options);
  r.left = r.surface.value;
  r.tolerance = r.surface.error_bound;
  for (std::size_t axis = 0; axis < n; ++axis) {
    r.projections.push_back(projection_measure(surface, axis, options));
    r.right += r.projections.back().value;
    r.tolerance += r.projections.back().error_bound;
  }
  const double rounding = 64 * std::numeric_limits<double>::epsilon() * static_cast<double>(n);
  r.passes = r.left <= r.right + r.tolerance + rounding;
  r.within_n = r.left <= static_cast<double>(n) + r.tolerance + rounding;
  return r;
}

double simplex_cdf(std::size_t n, double t) {
  if (n == 0) return t >= 0.0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  if (t <= 0.0) return 0.0;
  if (t >= nd) return 1.0;
  long double acc = 0.0L;
  long double factorial = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) factorial *= static_cast<long double>(k);
  for (std::size_t k = 0; k <= n; ++k) {
    const double shift = t - static_cast<double>(k);
    if (shift <= 0.0) break;
    const long double term = static_cast<long double>(binomial(n, k)) *
                             std::pow(static_cast<long double>(shift), static_cast<long double>(n));
    acc += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(std::clamp(acc / factorial, 0.0L, 1.0L));
}

double slab_volume(std::size_t n, double c) {
  if (n == 0) throw InvalidArgument("slab_volume: n must be positive");
  const double nd = static_cast<double>(n);
  if (!(c >= 0.0 && c <= nd)) {
    throw InvalidArgument("slab_volume: c = " + std::to_string(c) + " outside [0, " + std::to_string(n) + "]");
  }
  return simplex_cdf(n, (nd + c) / 2.0) - simplex_cdf(n, (nd - c) / 2.0);
}

ShearParams::ShearParams(std::size_t n, double epsilon) : n_(n), epsilon_(epsilon) {
  if (n == 0) throw InvalidArgument("shear: n must be positive");
  const double limit = 1.0 / (2.0 * static_cast<double>(n));
  if (!(epsilon > 0.0 && epsilon < limit)) {
    throw InvalidArgument("shear: epsilon must lie in (0, 1/(2n)) = (0, " + std::to_string(limit) + ")");
  }
}

double ShearParams::lipschitz() const {
  return 1.0 / std::sqrt(1.0 - 2.0 * static_cast<double>(n_) * epsilon_);
}

RealPoint shear(const RealPoint& x, const ShearParams& params) {
  if (x.dim() != params.n()) throw DimensionMismatch("shear: point dimension differs from n");
  const double shift = params.epsilon() * x.sum();
  std::vector<double> y(x.coords().begin(), x.coords().end());
  for (double& v : y) v -= shift;
  return RealPoint(std::move(y));
}

RealPoint shear_inverse(const RealPoint& y, const ShearParams& params) {
  if (y.dim() != params.n()) throw DimensionMismatch("shear_inverse: point dimension differs from n");
  const double n = static_cast<double>(params.n());
  const double s = y.sum() / (1.0 - n * params.epsilon());
  const double shift = params.epsilon() * s;
  std::vector<double> x(y.coords().begin(), y.coords().end());
  for (double& v : x) v += shift;
  return RealPoint(std::move(x));
}

const char* to_string(LipschitzMap map) {
  return map == LipschitzMap::ShearInverse ? "ShearInverse" : "SkewInverse2D";
}

LipschitzReport lipschitz_ratio(const std::function<RealPoint(const RealPoint&)>& map,
                                std::span<const std::pair<RealPoint, RealPoint>> pairs, double bound) {
  if (!(bound >= 1.0)) throw InvalidArgument("lipschitz check: bound must be at least 1");
  LipschitzReport r;
  for (const auto& [a, b] : pairs) {
    const double gap = distance(a, b);
    if (gap == 0.0) continue;
    r.max_ratio = std::max(r.max_ratio, distance(map(a), map(b)) / gap);
    ++r.ratios;
  }
  r.within_bound = r.max_ratio <= bound * (1.0 + 1e-12);
  return r;
}

LipschitzReport lipschitz_sample_check(const ShearParams& params, double bound, std::size_t pairs,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    std::vector<double> x(params.n());
    for (double& v : x) v = unit(rng);
    return shear(RealPoint(std::move(x)), params);
  };
  std::vector<std::pair<RealPoint, RealPoint>> sample;
  sample.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    auto a = draw();
    auto b = draw();
    sample.emplace_back(std::move(a), std::move(b));
  }
  return lipschitz_ratio([&](const RealPoint& y) { return shear_inverse(y, params); }, sample, bound);
}

LipschitzReport lipschitz_sample_check(const MonotoneGraphSurface& surface, double bound,
                                       std::size_t pairs, std::uint64_t seed) {
  if (surface.dim() != 2) throw InvalidArgument("skew Lipschitz check: surface must be planar");
  if (!(bound >= 1.0)) throw InvalidArgument("lipschitz check: bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&]() -> std::optional<double> {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const double x = unit(rng);
      if (surface.in_base(std::span<const double>(&x, 1))) return x;
    }
    return std::nullopt;
  };
  LipschitzReport r;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto x1 = draw();
    const auto x2 = draw();
    if (!x1 || !x2) break;
    const double y1 = surface.height(std::span<const double>(&*x1, 1));
    const double y2 = surface.height(std::span<const double>(&*x2, 1));
    const bool lower1 = *x1 <= y1;
    const bool lower2 = *x2 <= y2;
    if (lower1 != lower2) continue;
    // On the side where x is the smaller coordinate the skewed projection is y - x.
    const double d1 = lower1 ? y1 - *x1 : *x1 - y1;
    const double d2 = lower2 ? y2 - *x2 : *x2 - y2;
    const double image_gap = std::fabs(d1 - d2);
    if (image_gap == 0.0) continue;
    r.max_ratio = std::max(r.max_ratio, std::hypot(*x1 - *x2, y1 - y2) / image_gap);
    ++r.ratios;
  }
  r.within_bound = r.max_ratio <= bound * (1.0 + 1e-12);
  return r;
}

SkewReport skew_measures_2d(const MonotoneGraphSurface& surface, double tolerance,
                            const MeasureOptions& options) {
  if (surface.dim() != 2) throw InvalidArgument("skew_measures_2d: surface must be planar (n = 2)");
  std::vector<std::pair<double, double>> pieces;
  if (const auto* s = surface.as<LinearGraphSurface>()) {
    if (s->gradient[0] > 0.0) throw InvalidArgument("skew_measures_2d: linear graph is not order-reversing");
    for (const auto& box : s->base) pieces.emplace_back(box.lo[0], box.hi[0]);
    std::sort(pieces.begin(), pieces.end());
  } else {
    pieces.emplace_back(0.0, 1.0);
  }
  // g(x) = f(x) - x is strictly decreasing; each part's image is an interval.
  auto g = [&](double x) { return surface.height(std::span<const double>(&x, 1)) - x; };
  SkewReport r;
  r.crossing = last_true([&](double x) { return g(x) >= 0.0; }, 0.0, 1.0);
  const double xs = r.crossing;
  double d1 = 0.0;
  double d2 = 0.0;
  for (const auto& [a, b] : pieces) {
    if (a <= xs) d1 += std::max(0.0, g(a) - g(std::min(b, xs)));
    if (b >= xs) d2 += std::max(0.0, g(std::max(a, xs)) - g(b));
  }
  r.delta1 = closed_form(d1);
  r.delta2 = closed_form(d2);
  r.delta_sum = d1 + d2;
  r.surface = surface_measure(surface, options);
  r.tolerance = tolerance + r.surface.error_bound;
  r.passes = r.surface.value <= r.delta_sum + r.tolerance;
  return r;
}

double staircase_length(int depth) {
  if (depth < 0) throw InvalidArgument("staircase: depth must be non-negative");
  const double k = static_cast<double>(depth);
  return 1.0 - std::pow(2.0 / 3.0, k) + std::sqrt(1.0 + std::pow(4.0 / 9.0, k));
}

StaircasePolyline singular_staircase(int depth, bool with_vertices) {
  if (depth < 0) throw InvalidArgument("staircase: depth must be non-negative");
  StaircasePolyline out;
  if (!with_vertices) {
    out.length = staircase_length(depth);
    return out;
  }
  if (depth > 24) throw BudgetExceeded("staircase: vertices are produced up to depth 24");
  // Interval starts in units of 3^-depth.
  std::vector<std::int64_t> starts{0};
  std::int64_t width = 1;
  for (int level = 0; level < depth; ++level) width *= 3;
  const std::int64_t scale = width;
  for (int level = 0; level < depth; ++level) {
    std::vector<std::int64_t> next;
    next.reserve(starts.size() * 2);
    for (auto a : starts) {
      next.push_back(a);
      next.push_back(a + 2 * width / 3);
    }
    starts = std::move(next);
    width /= 3;
  }
  const double pieces = static_cast<double>(starts.size());
  const double unit = static_cast<double>(scale);
  out.vertices.reserve(2 * starts.size());
  for (std::size_t j = 0; j < starts.size(); ++j) {
    out.vertices.push_back(RealPoint{static_cast<double>(starts[j]) / unit, 1.0 - static_cast<double>(j) / pieces});
    out.vertices.push_back(
        RealPoint{static_cast<double>(starts[j] + width) / unit, 1.0 - static_cast<double>(j + 1) / pieces});
  }
  for (std::size_t j = 0; j + 1 < out.vertices.size(); ++j) {
    out.length += distance(out.vertices[j], out.vertices[j + 1]);
  }
  return out;
}

}  // namespace antichain
