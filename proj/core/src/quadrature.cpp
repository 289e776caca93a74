#include "antichain/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace antichain {
namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Weights of the embedded 7-point Gauss rule at Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return Segment{a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  QuadratureResult out;
  if (!(b > a)) return out;
  std::vector<Segment> segments{gauss_kronrod(f, a, b)};
  out.evaluations = 15;
  auto total_error = [&] {
    double e = 0.0;
    for (const auto& s : segments) e += s.error;
    return e;
  };
  double error = segments.front().error;
  while (error > options.abs_tol) {
    if (segments.size() >= options.max_intervals) {
      out.converged = false;
      break;
    }
    const auto worst = std::max_element(segments.begin(), segments.end(),
                                        [](const Segment& x, const Segment& y) { return x.error < y.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(mid > worst->a && mid < worst->b)) {
      out.converged = false;
      break;
    }
    const Segment left = gauss_kronrod(f, worst->a, mid);
    const Segment right = gauss_kronrod(f, mid, worst->b);
    out.evaluations += 30;
    *worst = left;
    segments.push_back(right);
    error = total_error();
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const auto& s : segments) out.value += s.value;
  out.error = total_error();
  return out;
}

QuadratureResult integrate_iterated(std::size_t dim,
                                    const std::function<double(std::span<const double>)>& f,
                                    const SliceLimits& limits, const QuadratureOptions& options) {
  std::vector<double> x(dim, 0.0);
  QuadratureResult total;

  // Inner integrals get a tighter tolerance so their errors, integrated over
  // the (unit-bounded) outer range, stay within budget.
  auto level = [&](auto&& self, std::size_t k, double tol) -> QuadratureResult {
    const auto [lo, hi] = limits(std::span<const double>(x.data(), k));
    if (!(hi > lo)) return {};
    if (k + 1 == dim) {
      return integrate(
          [&](double t) {
            x[k] = t;
            return f(x);
          },
          lo, hi, QuadratureOptions{tol, options.max_intervals});
    }
    double inner_error = 0.0;
    std::size_t inner_evals = 0;
    bool inner_ok = true;
    auto outer = integrate(
        [&](double t) {
          x[k] = t;
          const auto r = self(self, k + 1, tol / 4.0);
          inner_error = std::max(inner_error, r.error);
          inner_evals += r.evaluations;
          inner_ok = inner_ok && r.converged;
          return r.value;
        },
        lo, hi, QuadratureOptions{tol / 2.0, options.max_intervals});
    outer.error += inner_error * (hi - lo);
    outer.evaluations += inner_evals;
    outer.converged = outer.converged && inner_ok;
    return outer;
  };
  if (dim == 0) {
    total.value = f(x);
    total.evaluations = 1;
    return total;
  }
  return level(level, 0, options.abs_tol);
}

double last_true(const std::function<bool(double)>& pred, double a, double b, int iterations) {
  if (!pred(a)) return a;
  if (pred(b)) return b;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;
    if (pred(mid)) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a;
}

}  // namespace antichain
