#include "antichain/surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "antichain/error.hpp"

namespace antichain {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_base_dim(std::span<const double> x, std::size_t n) {
  if (x.size() + 1 != n) throw DimensionMismatch("surface: base point has the wrong dimension");
}

double sum_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Cell index and local coordinate of x on a grid with `nodes` points per axis.
std::pair<std::size_t, double> locate(double x, std::size_t nodes) {
  const double scaled = std::clamp(x, 0.0, 1.0) * static_cast<double>(nodes - 1);
  const auto cell = std::min(static_cast<std::size_t>(scaled), nodes - 2);
  return {cell, scaled - static_cast<double>(cell)};
}

}  // namespace

double AxisBox::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= std::max(0.0, hi[i] - lo[i]);
  return v;
}

bool AxisBox::contains(std::span<const double> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

TabulatedSurface::TabulatedSurface(std::size_t n, std::size_t nodes, std::vector<double> values)
    : n_(n), nodes_(nodes), values_(std::move(values)) {
  if (n < 2) throw InvalidArgument("tabulated surface: dimension must be at least 2");
  if (nodes < 2) throw InvalidArgument("tabulated surface: need at least 2 nodes per axis");
  const std::size_t d = n - 1;
  std::size_t expected = 1;
  for (std::size_t j = 0; j < d; ++j) expected *= nodes;
  if (values_.size() != expected) {
    throw InvalidArgument("tabulated surface: expected " + std::to_string(expected) +
                          " samples, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("tabulated surface: sample outside [0,1]");
  }
  // Order-reversing on the grid: stepping up one node along any axis never
  // increases the value.
  std::size_t stride = 1;
  for (std::size_t axis = d; axis-- > 0;) {
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
      if ((flat / stride) % nodes == nodes - 1) continue;
      if (values_[flat + stride] > values_[flat]) {
        throw InvalidArgument("tabulated surface: samples are not order-reversing along axis " +
                              std::to_string(axis));
      }
    }
    stride *= nodes;
  }
}

double TabulatedSurface::node_value(std::span<const std::size_t> index) const {
  std::size_t flat = 0;
  for (auto i : index) flat = flat * nodes_ + i;
  return values_[flat];
}

double TabulatedSurface::value(std::span<const double> x) const {
  const std::size_t d = n_ - 1;
  if (x.size() != d) throw DimensionMismatch("tabulated surface: base point has the wrong dimension");
  std::vector<std::size_t> cell(d);
  std::vector<double> t(d);
  for (std::size_t j = 0; j < d; ++j) std::tie(cell[j], t[j]) = locate(x[j], nodes_);
  std::vector<std::size_t> corner(d);
  double acc = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    double w = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      const bool up = (mask >> j) & 1u;
      corner[j] = cell[j] + (up ? 1 : 0);
      w *= up ? t[j] : 1.0 - t[j];
    }
    acc += w * node_value(corner);
  }
  return acc;
}

std::vector<double> TabulatedSurface::gradient(std::span<const double> x) const {
  const std::size_t d = n_ - 1;
  if (x.size() != d) throw DimensionMismatch("tabulated surface: base point has the wrong dimension");
  std::vector<std::size_t> cell(d);
  std::vector<double> t(d);
  for (std::size_t j = 0; j < d; ++j) std::tie(cell[j], t[j]) = locate(x[j], nodes_);
  std::vector<double> grad(d, 0.0);
  std::vector<std::size_t> corner(d);
  const double h = static_cast<double>(nodes_ - 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    for (std::size_t j = 0; j < d; ++j) corner[j] = cell[j] + ((mask >> j) & 1u);
    const double v = node_value(corner);
    for (std::size_t g = 0; g < d; ++g) {
      double w = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        const bool up = (mask >> j) & 1u;
        if (j == g) {
          w *= up ? h : -h;
        } else {
          w *= up ? t[j] : 1.0 - t[j];
        }
      }
      grad[g] += w * v;
    }
  }
  return grad;
}

double cantor_approximation(double x, int depth) {
  x = std::clamp(x, 0.0, 1.0);
  double offset = 0.0;
  double scale = 1.0;
  for (int level = 0; level < depth; ++level) {
    if (x < 1.0 / 3.0) {
      x *= 3.0;
    } else if (x > 2.0 / 3.0) {
      x = 3.0 * x - 2.0;
      offset += scale / 2.0;
    } else {
      return offset + scale / 2.0;
    }
    scale /= 2.0;
  }
  return offset + scale * x;
}

MonotoneGraphSurface MonotoneGraphSurface::hyperplane(std::size_t n) {
  if (n < 2) throw InvalidArgument("hyperplane surface: dimension must be at least 2");
  return MonotoneGraphSurface(HyperplaneSurface{n});
}

MonotoneGraphSurface MonotoneGraphSurface::lp_sphere(std::size_t n, double p) {
  if (n < 2) throw InvalidArgument("lp-sphere surface: dimension must be at least 2");
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("lp-sphere surface: need p >= 1");
  return MonotoneGraphSurface(LpSphereSurface{n, p});
}

MonotoneGraphSurface MonotoneGraphSurface::linear(std::vector<double> gradient,
                                                  std::vector<AxisBox> base, double intercept) {
  const std::size_t d = gradient.size();
  if (d < 1) throw InvalidArgument("linear surface: gradient must have at least one entry");
  for (const auto& box : base) {
    if (box.lo.size() != d || box.hi.size() != d) {
      throw InvalidArgument("linear surface: base box has the wrong dimension");
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (!(0.0 <= box.lo[j] && box.lo[j] <= box.hi[j] && box.hi[j] <= 1.0)) {
        throw InvalidArgument("linear surface: base box must satisfy 0 <= lo <= hi <= 1");
      }
    }
  }
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      double overlap = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        overlap *= std::max(0.0, std::min(base[a].hi[j], base[b].hi[j]) -
                                     std::max(base[a].lo[j], base[b].lo[j]));
      }
      if (overlap > 0.0) throw InvalidArgument("linear surface: base boxes overlap");
    }
  }
  return MonotoneGraphSurface(LinearGraphSurface{std::move(gradient), intercept, std::move(base)});
}

MonotoneGraphSurface MonotoneGraphSurface::tabulated(std::size_t n, std::size_t nodes,
                                                     std::vector<double> values) {
  return MonotoneGraphSurface(TabulatedSurface(n, nodes, std::move(values)));
}

MonotoneGraphSurface MonotoneGraphSurface::staircase(int depth) {
  if (depth < 0 || depth > 40) throw InvalidArgument("staircase: depth must lie in [0, 40]");
  return MonotoneGraphSurface(StaircaseSurface{depth});
}

std::size_t MonotoneGraphSurface::dim() const {
  return std::visit(Overloaded{
                        [](const HyperplaneSurface& s) { return s.n; },
                        [](const LpSphereSurface& s) { return s.n; },
                        [](const LinearGraphSurface& s) { return s.gradient.size() + 1; },
                        [](const TabulatedSurface& s) { return s.dim(); },
                        [](const StaircaseSurface&) { return std::size_t{2}; },
                    },
                    family_);
}

const char* MonotoneGraphSurface::family_name() const {
  return std::visit(Overloaded{
                        [](const HyperplaneSurface&) { return "hyperplane"; },
                        [](const LpSphereSurface&) { return "lpsphere"; },
                        [](const LinearGraphSurface&) { return "linear"; },
                        [](const TabulatedSurface&) { return "tabulated"; },
                        [](const StaircaseSurface&) { return "staircase"; },
                    },
                    family_);
}

double MonotoneGraphSurface::height(std::span<const double> x) const {
  require_base_dim(x, dim());
  return std::visit(
      Overloaded{
          [&](const HyperplaneSurface& s) { return static_cast<double>(s.n) / 2.0 - sum_of(x); },
          [&](const LpSphereSurface& s) {
            double g = 1.0;
            for (double v : x) g -= std::pow(v, s.p);
            return std::copysign(std::pow(std::fabs(g), 1.0 / s.p), g);
          },
          [&](const LinearGraphSurface& s) {
            double h = s.intercept;
            for (std::size_t j = 0; j < x.size(); ++j) h += s.gradient[j] * x[j];
            return h;
          },
          [&](const TabulatedSurface& s) { return s.value(x); },
          [&](const StaircaseSurface& s) { return 1.0 - cantor_approximation(x[0], s.depth); },
      },
      family_);
}

bool MonotoneGraphSurface::in_base(std::span<const double> x) const {
  require_base_dim(x, dim());
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) return false;
  }
  return std::visit(Overloaded{
                        [&](const HyperplaneSurface&) {
                          const double h = height(x);
                          return h >= 0.0 && h <= 1.0;
                        },
                        [&](const LpSphereSurface&) { return height(x) >= 0.0; },
                        [&](const LinearGraphSurface& s) {
                          return std::any_of(s.base.begin(), s.base.end(),
                                             [&](const AxisBox& b) { return b.contains(x); });
                        },
                        [](const TabulatedSurface&) { return true; },
                        [](const StaircaseSurface&) { return true; },
                    },
                    family_);
}

std::vector<double> MonotoneGraphSurface::height_gradient(std::span<const double> x) const {
  require_base_dim(x, dim());
  return std::visit(
      Overloaded{
          [&](const HyperplaneSurface& s) { return std::vector<double>(s.n - 1, -1.0); },
          [&](const LpSphereSurface& s) {
            const double f = height(x);
            std::vector<double> g(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) g[j] = -std::pow(x[j] / f, s.p - 1.0);
            return g;
          },
          [&](const LinearGraphSurface& s) { return s.gradient; },
          [&](const TabulatedSurface& s) { return s.gradient(x); },
          [&](const StaircaseSurface& s) {
            // Flat on removed intervals, slope -(3/2)^k elsewhere.
            double v = std::clamp(x[0], 0.0, 1.0);
            for (int level = 0; level < s.depth; ++level) {
              if (v < 1.0 / 3.0) {
                v *= 3.0;
              } else if (v > 2.0 / 3.0) {
                v = 3.0 * v - 2.0;
              } else {
                return std::vector<double>{0.0};
              }
            }
            return std::vector<double>{-std::pow(1.5, s.depth)};
          },
      },
      family_);
}

}  // namespace antichain
