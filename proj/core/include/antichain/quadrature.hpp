#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

namespace antichain {

struct QuadratureOptions {
  double abs_tol = 1e-6;
  std::size_t max_intervals = 4000;  // per one-dimensional integral
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature with bisection of the
// worst interval. The final sum runs over intervals in left-to-right order,
// so results are bit-reproducible.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

// Limits of the innermost remaining coordinate given the fixed prefix
// (x_0, ..., x_{k-1}); an empty slice is reported as lo >= hi.
using SliceLimits = std::function<std::pair<double, double>(std::span<const double> prefix)>;

// Iterated integral of f over { x : lo(x_<k) <= x_k <= hi(x_<k) for all k }.
QuadratureResult integrate_iterated(std::size_t dim,
                                    const std::function<double(std::span<const double>)>& f,
                                    const SliceLimits& limits, const QuadratureOptions& options = {});

// Largest t in [a, b] with pred(t) true, for pred true-then-false on [a, b].
// Returns a if pred(a) is false.
double last_true(const std::function<bool(double)>& pred, double a, double b, int iterations = 60);

}  // namespace antichain
