#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <set>

#include "antichain/partition.hpp"
#include "oracles.hpp"

using namespace antichain;

namespace {

LatticePointSet set2(std::initializer_list<LatticePoint> pts) { return LatticePointSet(2, pts); }

// Smallest gap over all weak antichains of size m in [0,k)^n, by subset enumeration.
std::int64_t brute_min_gap(std::size_t n, Coord k, std::size_t m) {
  const auto ground = oracle::box_points(n, k);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  oracle::for_each_subset(ground, [&](const std::vector<LatticePoint>& s) {
    if (s.size() != m || !oracle::is_weak_antichain(s)) return;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += static_cast<std::int64_t>(oracle::projection_count(s, i));
    best = std::min(best, sum - static_cast<std::int64_t>(m));
  });
  return best;
}

void expect_sound(const LatticePointSet& s) {
  const auto cert = greedy_partition(s);
  ASSERT_FALSE(certificate_defect(cert).has_value()) << *certificate_defect(cert);
  std::size_t total = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    total += cert.parts[i].size();
    ASSERT_EQ(cert.part_projection_sizes[i], cert.parts[i].size());
    ASSERT_EQ(oracle::projection_count(cert.parts[i].points(), i), cert.parts[i].size());
  }
  ASSERT_EQ(total, s.size());
}

}  // namespace

TEST(GreedyPartition, Singleton) {
  const auto cert = greedy_partition(set2({{5, 7}}));
  EXPECT_EQ(cert.parts[0], set2({{5, 7}}));
  EXPECT_TRUE(cert.parts[1].empty());
}

TEST(GreedyPartition, LShape) {
  const auto cert = greedy_partition(set2({{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(cert.parts[0], set2({{0, 0}, {0, 1}}));
  EXPECT_EQ(cert.parts[1], set2({{1, 0}}));
}

TEST(GreedyPartition, AntiDiagonalFitsInFirstPart) {
  const auto cert = greedy_partition(set2({{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(cert.parts[0].size(), 3u);
  EXPECT_TRUE(cert.parts[1].empty());
}

TEST(GreedyPartition, EmptySet) {
  const auto cert = greedy_partition(LatticePointSet(3));
  EXPECT_EQ(cert.parts.size(), 3u);
  EXPECT_FALSE(certificate_defect(cert).has_value());
}

TEST(GreedyPartition, RejectsStrongPairWithWitness) {
  try {
    greedy_partition(set2({{0, 0}, {1, 1}}));
    FAIL() << "expected NotWeakAntichain";
  } catch (const NotWeakAntichain& e) {
    EXPECT_TRUE(dominates(e.lower(), e.upper(), OrderMode::StrongAll));
  }
}

TEST(GreedyPartition, ViolationWitnessIsAlwaysStrongPair) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Coord> coord(0, 3);
  int rejected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(LatticePoint{coord(rng), coord(rng), coord(rng)});
    const auto s = LatticePointSet::from_unsorted(3, pts);
    if (classify(s).is_weak_antichain) {
      expect_sound(s);
      continue;
    }
    ++rejected;
    try {
      greedy_partition(s);
      FAIL() << "accepted a set with a strong pair";
    } catch (const NotWeakAntichain& e) {
      EXPECT_TRUE(s.contains(e.lower()));
      EXPECT_TRUE(s.contains(e.upper()));
      EXPECT_TRUE(dominates(e.lower(), e.upper(), OrderMode::StrongAll));
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(GreedyPartition, SoundOnEveryWeakAntichainInSmallBoxes) {
  for (auto [n, k] : {std::pair<std::size_t, Coord>{2, 3}, {3, 2}}) {
    oracle::for_each_subset(oracle::box_points(n, k), [n = n](const std::vector<LatticePoint>& pts) {
      if (!oracle::is_weak_antichain(pts)) return;
      const LatticePointSet s(n, pts);
      expect_sound(s);
      const auto g = projection_gap(s);
      if (!s.empty()) ASSERT_GE(g.gap, static_cast<std::int64_t>(n) - 1);
    });
  }
}

TEST(GreedyPartition, Deterministic) {
  const auto s = random_weak_antichain(3, 6, 40, 99);
  const auto a = greedy_partition(s);
  const auto b = greedy_partition(LatticePointSet::from_unsorted(3, {s.points().rbegin(), s.points().rend()}));
  EXPECT_EQ(a.parts, b.parts);
}

TEST(CertificateDefect, DetectsTampering) {
  auto cert = greedy_partition(set2({{0, 0}, {0, 1}, {1, 0}}));
  auto moved = cert;
  moved.parts[1] = set2({{1, 0}, {0, 0}});
  EXPECT_TRUE(certificate_defect(moved).has_value());
  auto dropped = cert;
  dropped.parts[1] = LatticePointSet(2);
  EXPECT_TRUE(certificate_defect(dropped).has_value());
  auto collapsing = cert;
  collapsing.parts[0] = set2({{0, 0}, {1, 0}});
  collapsing.parts[1] = set2({{0, 1}});
  EXPECT_TRUE(certificate_defect(collapsing).has_value());
}

TEST(ProjectionGap, Examples) {
  auto g = projection_gap(set2({{0, 1}, {1, 0}}));
  EXPECT_EQ(g.set_size, 2u);
  EXPECT_EQ(g.projection_sizes, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(g.gap, 2);
  g = projection_gap(set2({{0, 0}, {1, 0}}));
  EXPECT_EQ(g.projection_sizes, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(g.gap, 1);
  EXPECT_EQ(projection_gap(LatticePointSet(2)).gap, 0);
}

TEST(ProjectionGap, DimensionOne) {
  const auto g = projection_gap(LatticePointSet(1, {LatticePoint{4}}));
  EXPECT_EQ(g.projection_sizes, (std::vector<std::size_t>{1}));
  EXPECT_EQ(g.gap, 0);
}

TEST(GapScan, Singletons) {
  EXPECT_EQ(exhaustive_gap_scan(2, 3, 1).min_gap, 1);
}

TEST(GapScan, PairsInTheSquare) {
  const auto r = exhaustive_gap_scan(2, 3, 2);
  EXPECT_EQ(r.min_gap, 1);
  EXPECT_EQ(r.witness, set2({{0, 0}, {0, 1}}));
  EXPECT_EQ(projection_gap(r.witness).gap, 1);
}

TEST(GapScan, PairsInTheCubeHaveGapThree) {
  // Two distinct points differ in at least one coordinate, so at most one
  // projection collapses: the gap is at least 3 * 2 - 1 - 2.
  const auto r = exhaustive_gap_scan(3, 2, 2);
  EXPECT_EQ(r.min_gap, brute_min_gap(3, 2, 2));
  EXPECT_EQ(r.min_gap, 3);
}

TEST(GapScan, MatchesSubsetEnumeration) {
  for (std::size_t m = 1; m <= 5; ++m) {
    EXPECT_EQ(exhaustive_gap_scan(2, 3, m).min_gap, brute_min_gap(2, 3, m)) << "m=" << m;
  }
  for (std::size_t m = 1; m <= 7; ++m) {
    EXPECT_EQ(exhaustive_gap_scan(3, 2, m).min_gap, brute_min_gap(3, 2, m)) << "m=" << m;
  }
}

TEST(GapScan, CountsWeakAntichains) {
  std::uint64_t count = 0;
  oracle::for_each_subset(oracle::box_points(2, 3), [&](const std::vector<LatticePoint>& s) {
    if (s.size() == 3 && oracle::is_weak_antichain(s)) ++count;
  });
  EXPECT_EQ(exhaustive_gap_scan(2, 3, 3).weak_antichains, count);
}

TEST(GapScan, ThreadCountDoesNotChangeResult) {
  GapScanOptions one;
  one.threads = 1;
  GapScanOptions four;
  four.threads = 4;
  const auto a = exhaustive_gap_scan(3, 3, 4, one);
  const auto b = exhaustive_gap_scan(3, 3, 4, four);
  EXPECT_EQ(a.min_gap, b.min_gap);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.weak_antichains, b.weak_antichains);
}

TEST(GapScan, Errors) {
  GapScanOptions tight;
  tight.budget = 1000;
  EXPECT_THROW(exhaustive_gap_scan(4, 8, 10, tight), BudgetExceeded);
  EXPECT_THROW(exhaustive_gap_scan(2, 2, 4), InvalidArgument);
}

TEST(Counting, Helpers) {
  EXPECT_EQ(saturating_binomial(9, 2), 36u);
  EXPECT_EQ(saturating_binomial(4096, 2000), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(max_weak_antichain_size(2, 3), 5u);
  EXPECT_EQ(max_weak_antichain_size(4, 8), 4096u - 2401u);
}

TEST(RandomWeakAntichain, SizeThreeInTheUnitSquare) {
  std::set<std::vector<LatticePoint>> valid;
  oracle::for_each_subset(oracle::box_points(2, 2), [&](const std::vector<LatticePoint>& s) {
    if (s.size() == 3 && oracle::is_weak_antichain(s)) valid.insert(s);
  });
  EXPECT_EQ(valid.size(), 2u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_weak_antichain(2, 2, 3, seed);
    EXPECT_TRUE(valid.count(s.points())) << "seed " << seed;
  }
}

TEST(RandomWeakAntichain, TrivialTargets) {
  EXPECT_TRUE(random_weak_antichain(3, 4, 0, 1).empty());
  const auto s = random_weak_antichain(1, 5, 1, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_GE(s[0][0], 0);
  EXPECT_LT(s[0][0], 5);
}

TEST(RandomWeakAntichain, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_weak_antichain(4, 8, 100, seed);
    EXPECT_EQ(a, random_weak_antichain(4, 8, 100, seed));
    EXPECT_EQ(a.size(), 100u);
    EXPECT_TRUE(classify(a).is_weak_antichain);
    for (const auto& p : a) {
      for (auto v : p.coords()) {
        EXPECT_GE(v, 0);
        EXPECT_LT(v, 8);
      }
    }
  }
}

TEST(RandomWeakAntichain, Errors) {
  EXPECT_THROW(random_weak_antichain(2, 2, 4, 1), InvalidArgument);
  RandomAntichainOptions tiny;
  tiny.attempts_per_restart = 1;
  tiny.restarts = 1;
  EXPECT_THROW(random_weak_antichain(3, 8, 169, 1, tiny), BudgetExceeded);
}
