#include "antichain/extremal.hpp"

#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "antichain/error.hpp"

namespace antichain {
namespace {

void require_grid(std::size_t n, Coord m) {
  if (n < 1 || m < 1) throw InvalidArgument("grid poset needs n >= 1 and m >= 1");
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

// Calls visit(coords) for every grid point in lexicographic order.
template <typename Visit>
void for_each_grid_point(std::size_t n, Coord m, Visit&& visit) {
  std::vector<Coord> c(n, 0);
  while (true) {
    visit(c);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++c[j] < m) break;
      c[j] = 0;
      if (j == 0) return;
    }
  }
}

// Hopcroft-Karp on a bipartite graph with identical left and right vertex sets.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), match_left_(adj.size(), kNone), match_right_(adj.size(), kNone),
        dist_(adj.size()) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kNone && dfs(u)) ++matched;
      }
    }
    return matched;
  }

  // Left vertices reachable from unmatched left vertices by alternating paths.
  std::vector<bool> left_reach() const { return reach(true); }
  std::vector<bool> right_reach() const { return reach(false); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        const auto w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (auto v : adj_[u]) {
      const auto w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  std::vector<bool> reach(bool want_left) const {
    std::vector<bool> left(adj_.size(), false);
    std::vector<bool> right(adj_.size(), false);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kNone) {
        left[u] = true;
        q.push(u);
      }
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        if (right[v] || match_left_[u] == v) continue;
        right[v] = true;
        const auto w = match_right_[v];
        if (w != kNone && !left[w]) {
          left[w] = true;
          q.push(w);
        }
      }
    }
    return want_left ? left : right;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

const char* to_string(WidthMethod method) {
  return method == WidthMethod::Matching ? "matching" : "construction";
}

std::uint64_t layer_size(std::size_t n, Coord m, std::int64_t level) {
  require_grid(n, m);
  const std::int64_t top = static_cast<std::int64_t>(n) * (m - 1);
  if (level < 0 || level > top) return 0;
  // coeffs[s] = number of points of the partial grid with coordinate sum s.
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(level) + 1, 0);
  coeffs[0] = 1;
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<std::uint64_t> next(coeffs.size(), 0);
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
      if (coeffs[s] == 0) continue;
      for (Coord v = 0; v < m && s + static_cast<std::size_t>(v) < next.size(); ++v) {
        next[s + static_cast<std::size_t>(v)] += coeffs[s];
      }
    }
    coeffs = std::move(next);
  }
  return coeffs[static_cast<std::size_t>(level)];
}

LatticePointSet layer_construct(std::size_t n, Coord m, std::int64_t level) {
  require_grid(n, m);
  std::vector<LatticePoint> pts;
  for_each_grid_point(n, m, [&](const std::vector<Coord>& c) {
    std::int64_t s = 0;
    for (auto v : c) s += v;
    if (s == level) pts.emplace_back(c);
  });
  return LatticePointSet(n, std::move(pts));
}

LatticePointSet wn_construct(std::size_t n, Coord m) {
  require_grid(n, m);
  std::vector<LatticePoint> pts;
  for_each_grid_point(n, m, [&](const std::vector<Coord>& c) {
    for (auto v : c) {
      if (v == 0) {
        pts.emplace_back(c);
        return;
      }
    }
  });
  return LatticePointSet(n, std::move(pts));
}

std::int64_t middle_level(std::size_t n, Coord m) {
  require_grid(n, m);
  return static_cast<std::int64_t>(n) * (m - 1) / 2;
}

WidthResult max_antichain(const GridPoset& poset, std::uint64_t budget) {
  require_grid(poset.n, poset.m);
  if (poset.mode == OrderMode::Leq) {
    throw InvalidArgument("max_antichain: the order must be strict");
  }
  const std::uint64_t size = checked_pow(poset.m, poset.n);
  if (size > budget) {
    throw BudgetExceeded("max_antichain: grid has " + std::to_string(size) +
                         " points, budget is " + std::to_string(budget));
  }
  std::vector<LatticePoint> pts;
  pts.reserve(size);
  for_each_grid_point(poset.n, poset.m, [&](const std::vector<Coord>& c) { pts.emplace_back(c); });

  // Edge u -> v whenever u is strictly below v; the relation is transitive,
  // so path covers and chain covers coincide.
  std::vector<std::vector<std::size_t>> adj(pts.size());
  for (std::size_t u = 0; u < pts.size(); ++u) {
    for (std::size_t v = 0; v < pts.size(); ++v) {
      if (u != v && dominates(pts[u], pts[v], poset.mode)) adj[u].push_back(v);
    }
  }
  BipartiteMatcher matcher(adj);
  const std::size_t matching = matcher.run();

  // Konig: the cover is (unreached left) + (reached right); elements whose
  // two copies both avoid the cover form a maximum antichain.
  const auto left = matcher.left_reach();
  const auto right = matcher.right_reach();
  std::vector<LatticePoint> witness;
  for (std::size_t u = 0; u < pts.size(); ++u) {
    if (left[u] && !right[u]) witness.push_back(pts[u]);
  }
  WidthResult result{pts.size() - matching, LatticePointSet(poset.n, std::move(witness)),
                     WidthMethod::Matching};
  if (result.witness.size() != result.width) {
    throw Error("max_antichain: witness extraction produced " +
                std::to_string(result.witness.size()) + " points for width " +
                std::to_string(result.width));
  }
  return result;
}

WidthResult extremal_construction(const GridPoset& poset) {
  require_grid(poset.n, poset.m);
  LatticePointSet witness = poset.mode == OrderMode::StrongAll
                                ? wn_construct(poset.n, poset.m)
                                : layer_construct(poset.n, poset.m, middle_level(poset.n, poset.m));
  const std::size_t width = witness.size();
  return WidthResult{width, std::move(witness), WidthMethod::Construction};
}

}  // namespace antichain
