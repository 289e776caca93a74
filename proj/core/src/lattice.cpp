#include "antichain/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "antichain/error.hpp"

namespace antichain {
namespace {

template <typename T>
bool dominates_coords(std::span<const T> x, std::span<const T> y, OrderMode mode) {
  if (x.size() != y.size()) throw DimensionMismatch("dominates: points of different dimension");
  switch (mode) {
    case OrderMode::Leq:
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
      }
      return true;
    case OrderMode::StrictProduct: {
      bool differs = false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
        differs = differs || x[i] != y[i];
      }
      return differs;
    }
    case OrderMode::StrongAll:
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] < y[i])) return false;
      }
      return true;
  }
  return false;
}

// Both orders are checked in one sweep over unordered pairs.
template <typename Points>
Classification classify_points(const Points& points) {
  Classification out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const auto x = points[a].coords();
      const auto y = points[b].coords();
      if (out.is_antichain &&
          (dominates_coords(x, y, OrderMode::StrictProduct) ||
           dominates_coords(y, x, OrderMode::StrictProduct))) {
        out.is_antichain = false;
      }
      if (dominates_coords(x, y, OrderMode::StrongAll) ||
          dominates_coords(y, x, OrderMode::StrongAll)) {
        out.is_antichain = false;
        out.is_weak_antichain = false;
        return out;
      }
    }
  }
  return out;
}

template <typename T>
std::vector<std::size_t> minimal_axes(std::span<const T> c) {
  const T lo = *std::min_element(c.begin(), c.end());
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == lo) axes.push_back(i);
  }
  return axes;
}

template <typename T>
std::vector<T> skew_coords(std::span<const T> c, std::size_t axis) {
  std::vector<T> out;
  out.reserve(c.size() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != axis) out.push_back(c[j] - c[axis]);
  }
  return out;
}

template <typename T>
void require_minimal(std::span<const T> c, std::size_t axis) {
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < c[axis]) {
      throw InvalidArgument("skew_project: point whose coordinate " + std::to_string(axis) +
                            " is not minimal");
    }
  }
}

}  // namespace

LatticePoint::LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("LatticePoint: dimension must be at least 1");
}

LatticePoint::LatticePoint(std::initializer_list<Coord> coords)
    : LatticePoint(std::vector<Coord>(coords)) {}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

const char* to_string(OrderMode mode) {
  switch (mode) {
    case OrderMode::Leq:
      return "leq";
    case OrderMode::StrictProduct:
      return "strict";
    case OrderMode::StrongAll:
      return "strong";
  }
  return "?";
}

bool dominates(const LatticePoint& x, const LatticePoint& y, OrderMode mode) {
  return dominates_coords(x.coords(), y.coords(), mode);
}

bool dominates(const RealPoint& x, const RealPoint& y, OrderMode mode) {
  return dominates_coords(x.coords(), y.coords(), mode);
}

LatticePointSet::LatticePointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("LatticePointSet: dimension must be at least 1");
}

LatticePointSet::LatticePointSet(std::size_t dim, std::vector<LatticePoint> points)
    : LatticePointSet(dim) {
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw DimensionMismatch("LatticePointSet: point " + p.to_string() + " has dimension " +
                              std::to_string(p.dim()) + ", expected " + std::to_string(dim));
    }
  }
  std::sort(points.begin(), points.end());
  const auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end()) {
    throw InvalidArgument("LatticePointSet: duplicate point " + dup->to_string());
  }
  points_ = std::move(points);
}

LatticePointSet::LatticePointSet(std::size_t dim, std::initializer_list<LatticePoint> points)
    : LatticePointSet(dim, std::vector<LatticePoint>(points)) {}

LatticePointSet LatticePointSet::in_box(std::size_t dim, Coord k, std::vector<LatticePoint> points) {
  for (const auto& p : points) {
    for (Coord c : p.coords()) {
      if (c < 0 || c >= k) {
        throw InvalidArgument("LatticePointSet: point " + p.to_string() + " outside [0," +
                              std::to_string(k) + ")^n");
      }
    }
  }
  return LatticePointSet(dim, std::move(points));
}

LatticePointSet LatticePointSet::from_unsorted(std::size_t dim, std::vector<LatticePoint> points) {
  for (const auto& p : points) {
    if (p.dim() != dim) throw DimensionMismatch("LatticePointSet: point of wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (dim == 0) throw InvalidArgument("LatticePointSet: dimension must be at least 1");
  return LatticePointSet(Canonical{}, dim, std::move(points));
}

bool LatticePointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Classification classify(const LatticePointSet& set) { return classify_points(set.points()); }

Classification classify(const RealPointSet& set) { return classify_points(set.points()); }

std::optional<std::pair<LatticePoint, LatticePoint>> find_violation(const LatticePointSet& set,
                                                                    OrderMode mode) {
  const auto& pts = set.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a != b && dominates(pts[a], pts[b], mode)) return std::make_pair(pts[a], pts[b]);
    }
  }
  return std::nullopt;
}

LatticePoint project(const LatticePoint& point, std::size_t axis) {
  if (axis >= point.dim()) throw InvalidArgument("project: axis out of range");
  if (point.dim() < 2) throw InvalidArgument("project: dimension must be at least 2");
  std::vector<Coord> out;
  out.reserve(point.dim() - 1);
  for (std::size_t j = 0; j < point.dim(); ++j) {
    if (j != axis) out.push_back(point[j]);
  }
  return LatticePoint(std::move(out));
}

LatticePointSet project(const LatticePointSet& set, std::size_t axis) {
  if (set.dim() < 2) throw InvalidArgument("project: dimension must be at least 2");
  if (axis >= set.dim()) {
    throw InvalidArgument("project: axis " + std::to_string(axis) + " out of range for dimension " +
                          std::to_string(set.dim()));
  }
  std::vector<LatticePoint> image;
  image.reserve(set.size());
  for (const auto& p : set) image.push_back(project(p, axis));
  return LatticePointSet::from_unsorted(set.dim() - 1, std::move(image));
}

std::vector<LatticePointSet> skew_split(const LatticePointSet& set, TieRule rule) {
  std::vector<std::vector<LatticePoint>> parts(set.dim());
  for (const auto& p : set) {
    const auto axes = minimal_axes(p.coords());
    if (rule == TieRule::LowestIndex) {
      parts[axes.front()].push_back(p);
    } else {
      for (auto axis : axes) parts[axis].push_back(p);
    }
  }
  std::vector<LatticePointSet> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.push_back(LatticePointSet::from_unsorted(set.dim(), std::move(part)));
  return out;
}

std::vector<RealPointSet> skew_split(const RealPointSet& set, TieRule rule) {
  std::vector<RealPointSet> out(set.dim(), RealPointSet(set.dim()));
  for (const auto& p : set) {
    const auto axes = minimal_axes(p.coords());
    if (rule == TieRule::LowestIndex) {
      out[axes.front()].push_back(p);
    } else {
      for (auto axis : axes) out[axis].push_back(p);
    }
  }
  return out;
}

LatticePointSet skew_project(const LatticePointSet& part, std::size_t axis) {
  if (part.dim() < 2 || axis >= part.dim()) throw InvalidArgument("skew_project: axis out of range");
  std::vector<LatticePoint> image;
  image.reserve(part.size());
  for (const auto& p : part) {
    require_minimal(p.coords(), axis);
    image.emplace_back(skew_coords(p.coords(), axis));
  }
  return LatticePointSet::from_unsorted(part.dim() - 1, std::move(image));
}

RealPointSet skew_project(const RealPointSet& part, std::size_t axis) {
  if (part.dim() < 2 || axis >= part.dim()) throw InvalidArgument("skew_project: axis out of range");
  RealPointSet image(part.dim() - 1);
  for (const auto& p : part) {
    require_minimal(p.coords(), axis);
    image.push_back(RealPoint(skew_coords(p.coords(), axis)));
  }
  return image;
}

}  // namespace antichain
