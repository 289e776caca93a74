#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace antichain {

// A point of R^n. Most operations expect coordinates in the unit cube; the
// shear map produces points in [-1, 1]^n, so the range is not enforced here.
class RealPoint {
 public:
  RealPoint() = default;
  explicit RealPoint(std::vector<double> coords);
  RealPoint(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  bool in_unit_cube() const;
  double sum() const;

  bool operator==(const RealPoint&) const = default;

 private:
  std::vector<double> coords_;
};

double distance(const RealPoint& a, const RealPoint& b);

// A finite sequence of real points of a common dimension.
class RealPointSet {
 public:
  explicit RealPointSet(std::size_t dim) : dim_(dim) {}
  RealPointSet(std::size_t dim, std::vector<RealPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<RealPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  void push_back(RealPoint p);

 private:
  std::size_t dim_;
  std::vector<RealPoint> points_;
};

}  // namespace antichain
