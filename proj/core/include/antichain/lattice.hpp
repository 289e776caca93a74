#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antichain/real_point.hpp"

namespace antichain {

using Coord = std::int64_t;

// A point of Z^n. Comparison operators are lexicographic and only serve to
// canonicalise sets; the dominance orders live in dominates().
class LatticePoint {
 public:
  explicit LatticePoint(std::vector<Coord> coords);
  LatticePoint(std::initializer_list<Coord> coords);

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  std::string to_string() const;

  bool operator==(const LatticePoint&) const = default;
  std::strong_ordering operator<=>(const LatticePoint& other) const {
    return coords_ <=> other.coords_;
  }

 private:
  std::vector<Coord> coords_;
};

// Leq is x <= y coordinatewise, StrictProduct is x <= y with x != y, and
// StrongAll is x_i < y_i for every coordinate.
enum class OrderMode { Leq, StrictProduct, StrongAll };

const char* to_string(OrderMode mode);

bool dominates(const LatticePoint& x, const LatticePoint& y, OrderMode mode);
bool dominates(const RealPoint& x, const RealPoint& y, OrderMode mode);

// Finite subset of Z^n, stored sorted and free of duplicates.
class LatticePointSet {
 public:
  explicit LatticePointSet(std::size_t dim);
  // Throws InvalidArgument on duplicates and DimensionMismatch on mixed dims.
  LatticePointSet(std::size_t dim, std::vector<LatticePoint> points);
  LatticePointSet(std::size_t dim, std::initializer_list<LatticePoint> points);

  // Same as the constructor, but additionally requires every coordinate in [0, k).
  static LatticePointSet in_box(std::size_t dim, Coord k, std::vector<LatticePoint> points);
  // Collapses duplicates instead of rejecting them.
  static LatticePointSet from_unsorted(std::size_t dim, std::vector<LatticePoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const;

  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  bool operator==(const LatticePointSet&) const = default;

 private:
  struct Canonical {};
  LatticePointSet(Canonical, std::size_t dim, std::vector<LatticePoint> sorted_unique)
      : dim_(dim), points_(std::move(sorted_unique)) {}

  std::size_t dim_;
  std::vector<LatticePoint> points_;
};

struct Classification {
  bool is_antichain = true;
  bool is_weak_antichain = true;
};

Classification classify(const LatticePointSet& set);
Classification classify(const RealPointSet& set);

// First pair (x, y) of the set with dominates(x, y, mode), if any.
std::optional<std::pair<LatticePoint, LatticePoint>> find_violation(const LatticePointSet& set,
                                                                    OrderMode mode);

// Deletes coordinate `axis` (0-based) from every point; duplicates collapse.
LatticePointSet project(const LatticePointSet& set, std::size_t axis);
LatticePoint project(const LatticePoint& point, std::size_t axis);

// How skew_split treats a point whose minimum is attained at several axes.
enum class TieRule {
  Intersection,  // the point belongs to every part whose axis attains the minimum
  LowestIndex,   // disjoint variant: the lowest such axis wins
};

// Part i collects the points whose i-th coordinate is minimal among their coordinates.
std::vector<LatticePointSet> skew_split(const LatticePointSet& set,
                                        TieRule rule = TieRule::Intersection);
std::vector<RealPointSet> skew_split(const RealPointSet& set, TieRule rule = TieRule::Intersection);

// Subtracts coordinate `axis` from all others and deletes it. Every point of
// `part` must have its minimum at `axis`.
LatticePointSet skew_project(const LatticePointSet& part, std::size_t axis);
RealPointSet skew_project(const RealPointSet& part, std::size_t axis);

}  // namespace antichain
