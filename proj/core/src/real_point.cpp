#include "antichain/real_point.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "antichain/error.hpp"

namespace antichain {

RealPoint::RealPoint(std::vector<double> coords) : coords_(std::move(coords)) {}

RealPoint::RealPoint(std::initializer_list<double> coords) : coords_(coords) {}

bool RealPoint::in_unit_cube() const {
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) return false;
  }
  return true;
}

double RealPoint::sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0.0); }

double distance(const RealPoint& a, const RealPoint& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("distance: points of different dimension");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

RealPointSet::RealPointSet(std::size_t dim, std::vector<RealPoint> points) : dim_(dim) {
  points_.reserve(points.size());
  for (auto& p : points) push_back(std::move(p));
}

void RealPointSet::push_back(RealPoint p) {
  if (p.dim() != dim_) throw DimensionMismatch("RealPointSet: point of wrong dimension");
  points_.push_back(std::move(p));
}

}  // namespace antichain
