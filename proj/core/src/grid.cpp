#include "antichain/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "antichain/error.hpp"

namespace antichain {
namespace {

__extension__ using Wide = unsigned __int128;

// Interval with independently open or closed ends.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

Interval grid_interval(Coord j, Coord m) {
  const double md = static_cast<double>(m);
  return Interval{static_cast<double>(j - 1) / md, static_cast<double>(j) / md, true, j == m};
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

Interval scale(const Interval& a, double c) {
  if (c > 0) return Interval{c * a.lo, c * a.hi, a.lo_closed, a.hi_closed};
  if (c < 0) return Interval{c * a.hi, c * a.lo, a.hi_closed, a.lo_closed};
  return Interval{0.0, 0.0, true, true};
}

std::uint64_t checked_pow(Coord base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= static_cast<std::uint64_t>(base);
  }
  return out;
}

// Visits every multi-index of [1, m]^dim in lexicographic order.
template <typename Visit>
void for_each_index(std::size_t dim, Coord m, Visit&& visit) {
  std::vector<Coord> d(dim, 1);
  while (true) {
    visit(d);
    std::size_t j = dim;
    while (true) {
      if (j == 0) return;
      --j;
      if (++d[j] <= m) break;
      d[j] = 1;
    }
  }
}

// Sum x_k = n/2 in units of 1/m: corner sums are integers, compared with n m / 2.
bool hyperplane_meets(const std::vector<Coord>& d, Coord m, std::size_t n) {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool all_closed = true;
  for (auto v : d) {
    lower += v - 1;
    upper += v;
    all_closed = all_closed && v == m;
  }
  const std::int64_t target = static_cast<std::int64_t>(n) * m;  // twice the level
  if (2 * lower > target) return false;
  return all_closed ? 2 * upper >= target : 2 * upper > target;
}

// F(x) = sum x_k^p - 1 increases strictly in every coordinate, so its values
// on the cube run from F(lower corner) up to F(upper corner), the latter
// attained only when every side is closed.
class LpSphereTest {
 public:
  LpSphereTest(double p, Coord m, std::size_t n) : p_(p), m_(m) {
    const double bits = p * std::log2(static_cast<double>(m)) + std::log2(static_cast<double>(n)) + 2.0;
    exact_ = p == std::floor(p) && bits < 120.0;
    if (exact_) {
      power_.resize(static_cast<std::size_t>(m) + 1);
      for (Coord j = 0; j <= m; ++j) {
        Wide acc = 1;
        for (int e = 0; e < static_cast<int>(p); ++e) acc *= static_cast<Wide>(j);
        power_[static_cast<std::size_t>(j)] = acc;
      }
    }
  }

  bool meets(const std::vector<Coord>& d) const {
    bool all_closed = true;
    for (auto v : d) all_closed = all_closed && v == m_;
    if (exact_) {
      Wide lower = 0;
      Wide upper = 0;
      for (auto v : d) {
        lower += power_[static_cast<std::size_t>(v - 1)];
        upper += power_[static_cast<std::size_t>(v)];
      }
      const auto one = power_[static_cast<std::size_t>(m_)];
      if (lower > one) return false;
      return all_closed ? upper >= one : upper > one;
    }
    long double lower = -1.0L;
    long double upper = -1.0L;
    const long double md = static_cast<long double>(m_);
    for (auto v : d) {
      lower += std::pow(static_cast<long double>(v - 1) / md, static_cast<long double>(p_));
      upper += std::pow(static_cast<long double>(v) / md, static_cast<long double>(p_));
    }
    if (lower > 0.0L) return false;
    return all_closed ? upper >= 0.0L : upper > 0.0L;
  }

 private:
  double p_;
  Coord m_;
  bool exact_ = false;
  std::vector<Wide> power_;
};

bool linear_meets(const LinearGraphSurface& s, const std::vector<Coord>& d, Coord m) {
  const std::size_t base_dim = s.gradient.size();
  const Interval z = grid_interval(d[base_dim], m);
  for (const auto& box : s.base) {
    Interval value{s.intercept, s.intercept, true, true};
    bool empty = false;
    for (std::size_t k = 0; k < base_dim && !empty; ++k) {
      const Interval side = intersect(grid_interval(d[k], m), Interval{box.lo[k], box.hi[k], true, true});
      if (side.empty()) {
        empty = true;
        break;
      }
      const Interval term = scale(side, s.gradient[k]);
      value.lo += term.lo;
      value.hi += term.hi;
      value.lo_closed = value.lo_closed && term.lo_closed;
      value.hi_closed = value.hi_closed && term.hi_closed;
    }
    if (!empty && !intersect(value, z).empty()) return true;
  }
  return false;
}

GridCover cover_points(const RealPointSet& points, Coord m) {
  std::vector<LatticePoint> idx;
  idx.reserve(points.size());
  for (const auto& p : points) idx.push_back(cube_index(p.coords(), m));
  return GridCover{m, points.dim(), LatticePointSet::from_unsorted(points.dim(), std::move(idx)), true};
}

// Continuous order-reversing height on the whole base: over a base cell the
// graph takes every height between f(upper corner) and f(lower corner).
// Cube of a height value; values within rounding noise of a cube face are
// taken to lie on it.
Coord height_cube(double z, Coord m) {
  const double scaled = std::clamp(z, 0.0, 1.0) * static_cast<double>(m);
  const double nearest = std::round(scaled);
  const double snapped = std::fabs(scaled - nearest) <= 1e-9 * std::max(1.0, nearest) ? nearest : scaled;
  return std::min<Coord>(m, static_cast<Coord>(std::floor(snapped)) + 1);
}

GridCover cover_monotone_height(const MonotoneGraphSurface& s, Coord m) {
  const std::size_t n = s.dim();
  const double md = static_cast<double>(m);
  std::vector<LatticePoint> idx;
  std::vector<double> lo(n - 1);
  std::vector<double> hi(n - 1);
  for_each_index(n - 1, m, [&](const std::vector<Coord>& base) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      lo[k] = static_cast<double>(base[k] - 1) / md;
      hi[k] = static_cast<double>(base[k]) / md;
    }
    const Coord z_lo = height_cube(s.height(hi), m);
    const Coord z_hi = height_cube(s.height(lo), m);
    std::vector<Coord> d(base);
    d.push_back(0);
    for (Coord z = z_lo; z <= z_hi; ++z) {
      d.back() = z;
      idx.emplace_back(d);
    }
  });
  return GridCover{m, n, LatticePointSet(n, std::move(idx)), true};
}

GridCover cover_surface(const MonotoneGraphSurface& s, Coord m, std::uint64_t budget) {
  const std::size_t n = s.dim();
  if (checked_pow(m, n) > budget) {
    throw BudgetExceeded("grid_cover: m^n = " + std::to_string(m) + "^" + std::to_string(n) +
                         " exceeds the cube budget");
  }
  if (s.as<TabulatedSurface>() || s.as<StaircaseSurface>()) return cover_monotone_height(s, m);

  std::function<bool(const std::vector<Coord>&)> meets;
  std::optional<LpSphereTest> lp;
  if (const auto* h = s.as<HyperplaneSurface>()) {
    meets = [m, n = h->n](const std::vector<Coord>& d) { return hyperplane_meets(d, m, n); };
  } else if (const auto* l = s.as<LpSphereSurface>()) {
    lp.emplace(l->p, m, l->n);
    meets = [&lp](const std::vector<Coord>& d) { return lp->meets(d); };
  } else if (const auto* g = s.as<LinearGraphSurface>()) {
    meets = [g, m](const std::vector<Coord>& d) { return linear_meets(*g, d, m); };
  }
  std::vector<LatticePoint> idx;
  for_each_index(n, m, [&](const std::vector<Coord>& d) {
    if (meets(d)) idx.emplace_back(d);
  });
  return GridCover{m, n, LatticePointSet(n, std::move(idx)), true};
}

GridCover cover_predicate(const PredicateSampler& sampler, Coord m, std::uint64_t budget) {
  const std::size_t n = sampler.dim;
  if (checked_pow(m, n) > budget) throw BudgetExceeded("grid_cover: m^n exceeds the cube budget");
  const std::size_t s = std::max<std::size_t>(1, sampler.samples_per_axis);
  const double md = static_cast<double>(m);
  std::vector<LatticePoint> idx;
  std::vector<double> x(n);
  for_each_index(n, m, [&](const std::vector<Coord>& d) {
    bool hit = false;
    // Sample offsets i/s for i < s keep every sample inside the half-open cube.
    for_each_index(n, static_cast<Coord>(s), [&](const std::vector<Coord>& sub) {
      if (hit) return;
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = (static_cast<double>(d[k] - 1) + static_cast<double>(sub[k] - 1) / static_cast<double>(s)) / md;
      }
      hit = sampler.contains(x);
    });
    if (hit) idx.emplace_back(d);
  });
  return GridCover{m, n, LatticePointSet(n, std::move(idx)), false};
}

}  // namespace

std::size_t sampler_dim(const SetSampler& sampler) {
  if (const auto* p = std::get_if<RealPointSet>(&sampler)) return p->dim();
  if (const auto* s = std::get_if<MonotoneGraphSurface>(&sampler)) return s->dim();
  return std::get<PredicateSampler>(sampler).dim;
}

LatticePoint cube_index(std::span<const double> x, Coord m) {
  if (m < 1) throw InvalidArgument("cube_index: resolution must be positive");
  std::vector<Coord> d(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] >= 0.0 && x[k] <= 1.0)) {
      throw InvalidArgument("cube_index: coordinate " + std::to_string(x[k]) + " outside [0,1]");
    }
    const auto j = static_cast<Coord>(std::floor(x[k] * static_cast<double>(m))) + 1;
    d[k] = std::min(j, m);
  }
  return LatticePoint(std::move(d));
}

GridCover grid_cover(const SetSampler& sampler, Coord m, std::uint64_t cube_budget) {
  if (m < 1) throw InvalidArgument("grid_cover: resolution must be positive");
  if (const auto* p = std::get_if<RealPointSet>(&sampler)) return cover_points(*p, m);
  if (const auto* s = std::get_if<MonotoneGraphSurface>(&sampler)) return cover_surface(*s, m, cube_budget);
  return cover_predicate(std::get<PredicateSampler>(sampler), m, cube_budget);
}

GridCover project_cover(const GridCover& cover, std::size_t axis) {
  return GridCover{cover.m, cover.dim - 1, project(cover.indices, axis), cover.exact};
}

double alpha(double s) {
  if (s < 0) throw InvalidArgument("alpha: s must be non-negative");
  return std::pow(std::numbers::pi, s / 2.0) / (std::pow(2.0, s) * std::tgamma(s / 2.0 + 1.0));
}

double d_const(std::size_t n) {
  if (n < 1) throw InvalidArgument("d_const: n must be positive");
  const double nd = static_cast<double>(n);
  return std::pow(nd, (nd - 1.0) / 2.0) * alpha(nd - 1.0);
}

MeasureEstimate covering_bound(const GridCover& cover) {
  if (cover.dim < 2) throw InvalidArgument("covering_bound: dimension must be at least 2");
  const double n = static_cast<double>(cover.dim);
  const double side = std::sqrt(n) / static_cast<double>(cover.m);
  MeasureEstimate est;
  est.value = alpha(n - 1.0) * static_cast<double>(cover.count()) * std::pow(side, n - 1.0);
  est.method = MeasureMethod::Covering;
  est.one_sided_upper = true;
  est.converged = cover.exact;
  return est;
}

double volume_ratio(const GridCover& cover) {
  return static_cast<double>(cover.count()) /
         std::pow(static_cast<double>(cover.m), static_cast<double>(cover.dim));
}

std::vector<double> volume_ratio_curve(const SetSampler& sampler, std::span<const Coord> resolutions) {
  std::vector<double> out;
  out.reserve(resolutions.size());
  for (auto m : resolutions) out.push_back(volume_ratio(grid_cover(sampler, m)));
  return out;
}

BoxDimensionFit box_dimension(const SetSampler& sampler, std::span<const Coord> resolutions) {
  if (resolutions.size() < 2) throw InvalidArgument("box_dimension: need at least two resolutions");
  BoxDimensionFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (auto m : resolutions) {
    fit.counts.push_back(grid_cover(sampler, m).count());
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(static_cast<double>(std::max<std::size_t>(fit.counts.back(), 1))));
  }
  if (std::all_of(fit.counts.begin(), fit.counts.end(), [](std::size_t c) { return c <= 1; })) {
    return fit;
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / k;
    my += ys[i] / k;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("box_dimension: resolutions must not all coincide");
  fit.dimension = sxy / sxx;
  fit.intercept = my - fit.dimension * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.dimension * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / k);
  return fit;
}

ChainedBound chained_covering_bound(const GridCover& cover) {
  ChainedBound out;
  const std::size_t n = cover.dim;
  out.cover_bound = covering_bound(cover).value;
  const double face = std::pow(static_cast<double>(cover.m), static_cast<double>(n - 1));
  for (std::size_t axis = 0; axis < n; ++axis) {
    out.projection_sum += static_cast<double>(project(cover.indices, axis).size()) / face;
  }
  const double d = d_const(n);
  out.chained_bound = d * out.projection_sum;
  out.dn_bound = d * static_cast<double>(n);
  constexpr double kSlack = 1e-12;
  out.chain_holds = out.cover_bound <= out.chained_bound * (1.0 + kSlack);
  out.dn_holds = out.cover_bound <= out.dn_bound * (1.0 + kSlack);
  return out;
}

}  // namespace antichain
