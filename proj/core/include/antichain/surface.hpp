#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace antichain {

// A_n^* = { x in [0,1]^n : sum x_i = n/2 }, as the graph of n/2 - sum x_i.
struct HyperplaneSurface {
  std::size_t n = 2;
};

// A_p = { x in [0,1]^n : ||x||_p = 1 }, as the graph of (1 - sum x_i^p)^(1/p).
struct LpSphereSurface {
  std::size_t n = 2;
  double p = 2.0;
};

// Closed axis-aligned box in [0,1]^d.
struct AxisBox {
  std::vector<double> lo;
  std::vector<double> hi;

  double volume() const;
  bool contains(std::span<const double> x) const;
};

// Graph of intercept + sum c_i x_i over a union of pairwise non-overlapping boxes.
struct LinearGraphSurface {
  std::vector<double> gradient;
  double intercept = 0.0;
  std::vector<AxisBox> base;
};

// Order-reversing function sampled on the uniform grid with `nodes` points per
// axis over [0,1]^(n-1) and extended by multilinear interpolation. Values are
// row-major with axis 0 most significant.
class TabulatedSurface {
 public:
  TabulatedSurface(std::size_t n, std::size_t nodes, std::vector<double> values);

  std::size_t dim() const { return n_; }
  std::size_t nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  double node_value(std::span<const std::size_t> index) const;

  double value(std::span<const double> x) const;
  std::vector<double> gradient(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::size_t nodes_;
  std::vector<double> values_;
};

// Decreasing reflection x -> 1 - C_k(x) of the depth-k piecewise linear
// approximation C_k of the middle-thirds staircase: flat over the removed
// intervals, linear with slope -(3/2)^k on the 2^k surviving ones.
struct StaircaseSurface {
  int depth = 0;
};

double cantor_approximation(double x, int depth);

class MonotoneGraphSurface {
 public:
  using Family = std::variant<HyperplaneSurface, LpSphereSurface, LinearGraphSurface,
                              TabulatedSurface, StaircaseSurface>;

  static MonotoneGraphSurface hyperplane(std::size_t n);
  static MonotoneGraphSurface lp_sphere(std::size_t n, double p);
  static MonotoneGraphSurface linear(std::vector<double> gradient, std::vector<AxisBox> base,
                                     double intercept = 0.0);
  static MonotoneGraphSurface tabulated(std::size_t n, std::size_t nodes, std::vector<double> values);
  static MonotoneGraphSurface staircase(int depth);

  std::size_t dim() const;
  const Family& family() const { return family_; }
  const char* family_name() const;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&family_);
  }

  // Height over a base point x in [0,1]^(n-1). Families whose base region is
  // clipped return a continuous order-reversing extension outside it.
  double height(std::span<const double> x) const;
  bool in_base(std::span<const double> x) const;
  // Gradient of the height where it is differentiable.
  std::vector<double> height_gradient(std::span<const double> x) const;

 private:
  explicit MonotoneGraphSurface(Family family) : family_(std::move(family)) {}

  Family family_;
};

}  // namespace antichain
