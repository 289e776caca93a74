#include "antichain/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "antichain/parallel.hpp"

namespace antichain {
namespace {

__extension__ using Wide = unsigned __int128;

// Orders point indices by all coordinates except `axis`, then by `axis`, so
// that each group of points agreeing off `axis` is contiguous with its
// minimum first.
struct AxisLastLess {
  const std::vector<LatticePoint>* points;
  std::size_t axis;

  bool operator()(std::size_t a, std::size_t b) const {
    const auto& x = (*points)[a];
    const auto& y = (*points)[b];
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (j == axis) continue;
      if (x[j] != y[j]) return x[j] < y[j];
    }
    return x[axis] < y[axis];
  }
};

bool agree_off_axis(const LatticePoint& x, const LatticePoint& y, std::size_t axis) {
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (j != axis && x[j] != y[j]) return false;
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

LatticePoint box_point(std::uint64_t index, std::size_t n, Coord k) {
  std::vector<Coord> coords(n);
  for (std::size_t j = n; j-- > 0;) {
    coords[j] = static_cast<Coord>(index % static_cast<std::uint64_t>(k));
    index /= static_cast<std::uint64_t>(k);
  }
  return LatticePoint(std::move(coords));
}

bool strongly_comparable(std::span<const Coord> x, std::span<const Coord> y) {
  bool x_below = true;
  bool y_below = true;
  for (std::size_t j = 0; j < x.size(); ++j) {
    x_below = x_below && x[j] < y[j];
    y_below = y_below && y[j] < x[j];
  }
  return x_below || y_below;
}

std::size_t distinct_projections(const std::vector<const LatticePoint*>& pts, std::size_t axis) {
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    bool seen = false;
    for (std::size_t b = 0; b < a && !seen; ++b) seen = agree_off_axis(*pts[a], *pts[b], axis);
    if (!seen) ++distinct;
  }
  return distinct;
}

}  // namespace

NotWeakAntichain::NotWeakAntichain(LatticePoint lower, LatticePoint upper)
    : Error("not a weak antichain: " + lower.to_string() + " << " + upper.to_string()),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {}

PartitionCertificate greedy_partition(const LatticePointSet& set) {
  const std::size_t n = set.dim();
  const auto& pts = set.points();
  std::vector<std::size_t> remaining(pts.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  std::vector<std::vector<LatticePoint>> parts(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::sort(remaining.begin(), remaining.end(), AxisLastLess{&pts, axis});
    std::vector<std::size_t> next;
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      const bool group_start = r == 0 || !agree_off_axis(pts[remaining[r]], pts[remaining[r - 1]], axis);
      if (group_start) {
        parts[axis].push_back(pts[remaining[r]]);
      } else {
        next.push_back(remaining[r]);
      }
    }
    remaining = std::move(next);
  }

  if (!remaining.empty()) {
    // Walk back through the parts from the leftover point; each step lowers one
    // coordinate, so the end point lies strictly below it in every coordinate.
    const LatticePoint& top = pts[remaining.front()];
    LatticePoint z = top;
    for (std::size_t axis = n; axis-- > 0;) {
      for (const auto& p : parts[axis]) {
        if (agree_off_axis(p, z, axis) && p[axis] < z[axis]) {
          z = p;
          break;
        }
      }
    }
    throw NotWeakAntichain(z, top);
  }
  if (auto violation = find_violation(set, OrderMode::StrongAll)) {
    throw NotWeakAntichain(violation->first, violation->second);
  }

  PartitionCertificate cert{set, {}, {}};
  cert.parts.reserve(n);
  for (auto& part : parts) {
    cert.parts.emplace_back(n, std::move(part));
    cert.part_projection_sizes.push_back(projection_size(cert.parts.back(), cert.parts.size() - 1));
  }
  return cert;
}

std::optional<std::string> certificate_defect(const PartitionCertificate& cert) {
  const std::size_t n = cert.source.dim();
  if (cert.parts.size() != n) return "expected " + std::to_string(n) + " parts";
  if (cert.part_projection_sizes.size() != n) return "projection size list has wrong length";
  std::vector<LatticePoint> all;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& part = cert.parts[i];
    if (part.dim() != n) return "part " + std::to_string(i) + " has wrong dimension";
    const std::size_t image = projection_size(part, i);
    if (image != part.size()) {
      return "projection " + std::to_string(i) + " is not injective on its part";
    }
    if (cert.part_projection_sizes[i] != image) {
      return "recorded projection size of part " + std::to_string(i) + " is wrong";
    }
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "parts are not disjoint";
  if (all != cert.source.points()) return "union of parts differs from the source set";
  return std::nullopt;
}

std::size_t projection_size(const LatticePointSet& set, std::size_t axis) {
  if (axis >= set.dim()) throw InvalidArgument("projection_size: axis out of range");
  if (set.dim() == 1) return set.empty() ? 0 : 1;
  return project(set, axis).size();
}

GapReport projection_gap(const LatticePointSet& set) {
  GapReport report;
  report.set_size = set.size();
  std::int64_t total = 0;
  for (std::size_t axis = 0; axis < set.dim(); ++axis) {
    report.projection_sizes.push_back(projection_size(set, axis));
    total += static_cast<std::int64_t>(report.projection_sizes.back());
  }
  report.gap = total - static_cast<std::int64_t>(set.size());
  return report;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t max_weak_antichain_size(std::size_t n, Coord k) {
  if (k < 1) return 0;
  const auto big = saturating_pow(static_cast<std::uint64_t>(k), n);
  if (big == std::numeric_limits<std::uint64_t>::max()) return big;
  return big - saturating_pow(static_cast<std::uint64_t>(k - 1), n);
}

GapScanResult exhaustive_gap_scan(std::size_t n, Coord k, std::size_t m,
                                  const GapScanOptions& options) {
  if (n < 1 || k < 1) throw InvalidArgument("gap scan: need n >= 1 and k >= 1");
  const std::uint64_t box = saturating_pow(static_cast<std::uint64_t>(k), n);
  const std::uint64_t subsets = saturating_binomial(box, m);
  if (subsets > options.budget) {
    throw BudgetExceeded("gap scan: C(" + std::to_string(box) + ", " + std::to_string(m) +
                         ") subsets exceed the budget of " + std::to_string(options.budget) +
                         "; use a randomized scan instead");
  }
  if (m > max_weak_antichain_size(n, k)) {
    throw InvalidArgument("gap scan: no weak antichain of size " + std::to_string(m) +
                          " fits in [0," + std::to_string(k) + ")^" + std::to_string(n));
  }
  if (m == 0) return GapScanResult{0, LatticePointSet(n), 1};

  std::vector<LatticePoint> points;
  points.reserve(box);
  for (std::uint64_t i = 0; i < box; ++i) points.push_back(box_point(i, n, k));

  struct Partial {
    std::optional<std::int64_t> best;
    std::vector<std::size_t> witness;
    std::uint64_t count = 0;
  };
  const std::size_t first_count = static_cast<std::size_t>(box) - m + 1;
  std::vector<Partial> partials(first_count);

  parallel_for(first_count, options.threads, [&](std::size_t first) {
    Partial& out = partials[first];
    std::vector<std::size_t> chosen{first};
    std::vector<const LatticePoint*> chosen_pts{&points[first]};

    auto leaf = [&] {
      ++out.count;
      std::int64_t total = 0;
      for (std::size_t axis = 0; axis < n; ++axis) {
        total += n == 1 ? 1 : static_cast<std::int64_t>(distinct_projections(chosen_pts, axis));
      }
      const std::int64_t gap = total - static_cast<std::int64_t>(m);
      if (!out.best || gap < *out.best) {
        out.best = gap;
        out.witness = chosen;
      }
    };
    // Depth-first over increasing index tuples; lexicographic order is kept
    // because candidates are tried in increasing order.
    auto extend = [&](auto&& self) -> void {
      if (chosen.size() == m) {
        leaf();
        return;
      }
      const std::size_t needed = m - chosen.size();
      for (std::size_t c = chosen.back() + 1; c + needed <= box; ++c) {
        bool ok = true;
        for (const auto* p : chosen_pts) {
          if (strongly_comparable(p->coords(), points[c].coords())) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(c);
        chosen_pts.push_back(&points[c]);
        self(self);
        chosen.pop_back();
        chosen_pts.pop_back();
      }
    };
    extend(extend);
  });

  GapScanResult result{0, LatticePointSet(n), 0};
  std::optional<std::int64_t> best;
  const std::vector<std::size_t>* witness = nullptr;
  for (const auto& partial : partials) {
    result.weak_antichains += partial.count;
    if (partial.best && (!best || *partial.best < *best)) {
      best = partial.best;
      witness = &partial.witness;
    }
  }
  if (!best) {
    throw InvalidArgument("gap scan: no weak antichain of size " + std::to_string(m) + " found");
  }
  std::vector<LatticePoint> wpts;
  for (auto idx : *witness) wpts.push_back(points[idx]);
  result.min_gap = *best;
  result.witness = LatticePointSet(n, std::move(wpts));
  return result;
}

LatticePointSet random_weak_antichain(std::size_t n, Coord k, std::size_t target_size,
                                      std::uint64_t seed, const RandomAntichainOptions& options) {
  if (n < 1 || k < 1) throw InvalidArgument("random_weak_antichain: need n >= 1 and k >= 1");
  if (target_size > max_weak_antichain_size(n, k)) {
    throw InvalidArgument("random_weak_antichain: target size " + std::to_string(target_size) +
                          " exceeds k^n - (k-1)^n");
  }
  const std::uint64_t box = saturating_pow(static_cast<std::uint64_t>(k), n);
  const std::size_t attempts =
      options.attempts_per_restart ? options.attempts_per_restart
                                   : static_cast<std::size_t>(std::min<std::uint64_t>(box, 1u << 20) * 32);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(0, k - 1);
  std::vector<std::vector<Coord>> chosen;
  std::vector<Coord> candidate(n);

  for (std::size_t restart = 0; restart <= options.restarts; ++restart) {
    chosen.clear();
    for (std::size_t attempt = 0; attempt < attempts && chosen.size() < target_size; ++attempt) {
      for (auto& c : candidate) c = coord(rng);
      bool ok = true;
      for (const auto& p : chosen) {
        if (p == candidate || strongly_comparable(p, candidate)) {
          ok = false;
          break;
        }
      }
      if (ok) chosen.push_back(candidate);
    }
    if (chosen.size() == target_size) {
      std::vector<LatticePoint> pts;
      pts.reserve(chosen.size());
      for (auto& c : chosen) pts.emplace_back(std::move(c));
      return LatticePointSet(n, std::move(pts));
    }
  }
  throw BudgetExceeded("random_weak_antichain: could not reach size " + std::to_string(target_size) +
                       " within the retry budget");
}

}  // namespace antichain
