#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "antichain/lattice.hpp"

namespace oracle {

using antichain::Coord;
using antichain::LatticePoint;
using antichain::LatticePointSet;

inline std::vector<LatticePoint> box_points(std::size_t n, Coord k) {
  std::vector<LatticePoint> out;
  std::vector<Coord> x(n, 0);
  while (true) {
    out.emplace_back(x);
    std::size_t j = n;
    while (true) {
      if (j == 0) return out;
      --j;
      if (++x[j] < k) break;
      x[j] = 0;
    }
  }
}

inline bool strictly_below(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a[i] < b[i])) return false;
  }
  return true;
}

inline bool below_or_equal(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool is_weak_antichain(const std::vector<LatticePoint>& pts) {
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (strictly_below(a, b)) return false;
    }
  }
  return true;
}

inline bool is_antichain(const std::vector<LatticePoint>& pts) {
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (!(a == b) && below_or_equal(a, b)) return false;
    }
  }
  return true;
}

inline std::size_t projection_count(const std::vector<LatticePoint>& pts, std::size_t axis) {
  std::set<std::vector<Coord>> seen;
  for (const auto& p : pts) {
    std::vector<Coord> r;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i != axis) r.push_back(p[i]);
    }
    seen.insert(r);
  }
  return seen.size();
}

// Every subset of `ground`, as index masks.
inline void for_each_subset(const std::vector<LatticePoint>& ground,
                            const std::function<void(const std::vector<LatticePoint>&)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << ground.size();
  std::vector<LatticePoint> subset;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((mask >> i) & 1u) subset.push_back(ground[i]);
    }
    visit(subset);
  }
}

// Width by trying every subset (tiny grids only).
inline std::size_t brute_width(std::size_t n, Coord m, bool weak) {
  const auto ground = box_points(n, m);
  std::size_t best = 0;
  for_each_subset(ground, [&](const std::vector<LatticePoint>& s) {
    if (s.size() > best && (weak ? is_weak_antichain(s) : is_antichain(s))) best = s.size();
  });
  return best;
}

inline std::uint64_t brute_layer(std::size_t n, Coord m, std::int64_t level) {
  std::uint64_t count = 0;
  for (const auto& p : box_points(n, m)) {
    std::int64_t s = 0;
    for (auto v : p.coords()) s += v;
    if (s == level) ++count;
  }
  return count;
}

}  // namespace oracle
