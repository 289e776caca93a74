#include <gtest/gtest.h>

#include <cmath>

#include "antichain/error.hpp"
#include "antichain/extremal.hpp"
#include "antichain/partition.hpp"
#include "oracles.hpp"

using namespace antichain;

TEST(LayerSize, Examples) {
  EXPECT_EQ(layer_size(1, 5, 3), 1u);
  EXPECT_EQ(layer_size(2, 2, 1), 2u);
  EXPECT_EQ(layer_size(2, 3, 2), 3u);
}

TEST(LayerSize, OutOfRangeIsZero) {
  EXPECT_EQ(layer_size(2, 3, -1), 0u);
  EXPECT_EQ(layer_size(2, 3, 5), 0u);
}

TEST(LayerSize, MatchesEnumerationSymmetryAndTotal) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Coord m = 1; m <= 5; ++m) {
      const auto top = static_cast<std::int64_t>(n) * (m - 1);
      std::uint64_t total = 0;
      for (std::int64_t l = 0; l <= top; ++l) {
        EXPECT_EQ(layer_size(n, m, l), oracle::brute_layer(n, m, l));
        EXPECT_EQ(layer_size(n, m, l), layer_size(n, m, top - l));
        total += layer_size(n, m, l);
      }
      EXPECT_EQ(total, static_cast<std::uint64_t>(std::pow(m, n)));
    }
  }
}

TEST(LayerConstruct, Examples) {
  EXPECT_EQ(layer_construct(2, 3, 2),
            LatticePointSet(2, {LatticePoint{0, 2}, LatticePoint{1, 1}, LatticePoint{2, 0}}));
  EXPECT_EQ(layer_construct(2, 2, 1), LatticePointSet(2, {LatticePoint{0, 1}, LatticePoint{1, 0}}));
  EXPECT_EQ(layer_construct(3, 2, 1),
            LatticePointSet(3, {LatticePoint{0, 0, 1}, LatticePoint{0, 1, 0}, LatticePoint{1, 0, 0}}));
}

TEST(LayerConstruct, IsAntichainOfLayerSize) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Coord m = 1; m <= 4; ++m) {
      const auto l = middle_level(n, m);
      const auto layer = layer_construct(n, m, l);
      EXPECT_EQ(layer.size(), layer_size(n, m, l));
      EXPECT_TRUE(classify(layer).is_antichain);
    }
  }
}

TEST(WnConstruct, Examples) {
  const auto w = wn_construct(2, 3);
  EXPECT_EQ(w, LatticePointSet(2, {LatticePoint{0, 0}, LatticePoint{0, 1}, LatticePoint{0, 2},
                                   LatticePoint{1, 0}, LatticePoint{2, 0}}));
  EXPECT_EQ(wn_construct(1, 4), LatticePointSet(1, {LatticePoint{0}}));
  EXPECT_EQ(wn_construct(2, 2).size(), 3u);
}

TEST(WnConstruct, SizeAndClassification) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Coord m = 1; m <= 5; ++m) {
      const auto w = wn_construct(n, m);
      EXPECT_EQ(w.size(), static_cast<std::size_t>(std::pow(m, n) - std::pow(m - 1, n)));
      EXPECT_TRUE(classify(w).is_weak_antichain);
    }
  }
}

TEST(MaxAntichain, Examples) {
  EXPECT_EQ(max_antichain({2, 2, OrderMode::StrictProduct}).width, 2u);
  EXPECT_EQ(max_antichain({2, 3, OrderMode::StrictProduct}).width, 3u);
  EXPECT_EQ(max_antichain({2, 3, OrderMode::StrongAll}).width, 5u);
}

TEST(MaxAntichain, MatchesSubsetEnumeration) {
  for (auto [n, m] : {std::pair<std::size_t, Coord>{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    EXPECT_EQ(max_antichain({n, m, OrderMode::StrictProduct}).width, oracle::brute_width(n, m, false));
    EXPECT_EQ(max_antichain({n, m, OrderMode::StrongAll}).width, oracle::brute_width(n, m, true));
  }
}

TEST(MaxAntichain, ReproducesLayerAndWnOptimality) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Coord m = 1; m <= 6; ++m) {
      if (std::pow(m, n) > 256) continue;
      std::uint64_t best_layer = 0;
      for (std::int64_t l = 0; l <= static_cast<std::int64_t>(n) * (m - 1); ++l) {
        best_layer = std::max(best_layer, layer_size(n, m, l));
      }
      const auto strict = max_antichain({n, m, OrderMode::StrictProduct});
      EXPECT_EQ(strict.width, best_layer) << n << "," << m;
      EXPECT_EQ(strict.witness.size(), strict.width);
      EXPECT_TRUE(classify(strict.witness).is_antichain);
      EXPECT_EQ(strict.method, WidthMethod::Matching);

      const auto weak = max_antichain({n, m, OrderMode::StrongAll});
      EXPECT_EQ(weak.width, max_weak_antichain_size(n, m)) << n << "," << m;
      EXPECT_EQ(weak.witness.size(), weak.width);
      EXPECT_TRUE(classify(weak.witness).is_weak_antichain);
    }
  }
}

TEST(MaxAntichain, Errors) {
  EXPECT_THROW(max_antichain({2, 3, OrderMode::Leq}), InvalidArgument);
  EXPECT_THROW(max_antichain({3, 20, OrderMode::StrictProduct}), BudgetExceeded);
  EXPECT_THROW(max_antichain({0, 3, OrderMode::StrictProduct}), InvalidArgument);
}

TEST(ExtremalConstruction, MiddleLayerAndWn) {
  const auto strict = extremal_construction({3, 3, OrderMode::StrictProduct});
  EXPECT_EQ(strict.method, WidthMethod::Construction);
  EXPECT_EQ(strict.width, layer_size(3, 3, 3));
  const auto weak = extremal_construction({3, 3, OrderMode::StrongAll});
  EXPECT_EQ(weak.witness, wn_construct(3, 3));
}

TEST(Asymptotics, MiddleLayerShareOfWnDecreasesForBinaryGrid) {
  double previous = 2.0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const double ratio = static_cast<double>(layer_size(n, 2, middle_level(n, 2))) /
                         static_cast<double>(max_weak_antichain_size(n, 2));
    EXPECT_LT(ratio, previous) << "n=" << n;
    previous = ratio;
  }
}
