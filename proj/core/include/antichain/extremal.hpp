#pragma once

#include <cstddef>
#include <cstdint>

#include "antichain/lattice.hpp"

namespace antichain {

// The grid {0,...,m-1}^n under one of the strict orders. StrictProduct gives
// antichains, StrongAll gives weak antichains.
struct GridPoset {
  std::size_t n = 1;
  Coord m = 1;
  OrderMode mode = OrderMode::StrictProduct;
};

enum class WidthMethod { Matching, Construction };

const char* to_string(WidthMethod method);

struct WidthResult {
  std::size_t width = 0;
  LatticePointSet witness;
  WidthMethod method = WidthMethod::Matching;
};

// Number of grid points with coordinate sum `level`: the coefficient of
// t^level in (1 + t + ... + t^(m-1))^n. Out-of-range levels give 0.
std::uint64_t layer_size(std::size_t n, Coord m, std::int64_t level);

LatticePointSet layer_construct(std::size_t n, Coord m, std::int64_t level);

// Grid points with at least one zero coordinate; size m^n - (m-1)^n.
LatticePointSet wn_construct(std::size_t n, Coord m);

// floor(n(m-1)/2), a level of maximum size.
std::int64_t middle_level(std::size_t n, Coord m);

// Exact width through Dilworth's theorem: m^n minus a maximum matching in the
// bipartite comparability graph. The witness comes from the Konig vertex
// cover of that matching. Throws BudgetExceeded when m^n > budget.
WidthResult max_antichain(const GridPoset& poset, std::uint64_t budget = 4096);

// Middle layer for StrictProduct, W_n for StrongAll.
WidthResult extremal_construction(const GridPoset& poset);

}  // namespace antichain
