#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antichain/error.hpp"
#include "antichain/lattice.hpp"

namespace antichain {

// Raised when a set handed to the partition is not a weak antichain. The
// offending pair satisfies lower << upper.
class NotWeakAntichain : public Error {
 public:
  NotWeakAntichain(LatticePoint lower, LatticePoint upper);

  const LatticePoint& lower() const { return lower_; }
  const LatticePoint& upper() const { return upper_; }

 private:
  LatticePoint lower_;
  LatticePoint upper_;
};

// Split of a weak antichain into n parts such that deleting coordinate i is
// injective on part i.
struct PartitionCertificate {
  LatticePointSet source;
  std::vector<LatticePointSet> parts;
  std::vector<std::size_t> part_projection_sizes;  // |pi_i(parts[i])|
};

// Greedy construction: part i holds the points of the remainder that are
// minimal in coordinate i among remainder points agreeing on all other
// coordinates. Throws NotWeakAntichain if the input contains x << y.
PartitionCertificate greedy_partition(const LatticePointSet& set);

// Empty when the certificate is sound, otherwise a description of the defect.
std::optional<std::string> certificate_defect(const PartitionCertificate& cert);

struct GapReport {
  std::size_t set_size = 0;
  std::vector<std::size_t> projection_sizes;
  std::int64_t gap = 0;  // sum of projection sizes minus set size
};

GapReport projection_gap(const LatticePointSet& set);

// |pi_axis(set)|; in dimension 1 the image is a single point (or nothing).
std::size_t projection_size(const LatticePointSet& set, std::size_t axis);

struct GapScanOptions {
  std::uint64_t budget = 50'000'000;  // cap on C(k^n, m)
  unsigned threads = 0;               // 0 selects default_thread_count()
};

struct GapScanResult {
  std::int64_t min_gap = 0;
  LatticePointSet witness;  // lexicographically least set attaining min_gap
  std::uint64_t weak_antichains = 0;
};

// Minimum gap over all weak antichains of size m inside [0,k)^n. Throws
// BudgetExceeded when C(k^n, m) exceeds the budget and InvalidArgument when
// no weak antichain of that size exists in the box.
GapScanResult exhaustive_gap_scan(std::size_t n, Coord k, std::size_t m,
                                  const GapScanOptions& options = {});

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k);

// k^n - (k-1)^n, the largest weak antichain size in [0,k)^n.
std::uint64_t max_weak_antichain_size(std::size_t n, Coord k);

struct RandomAntichainOptions {
  std::size_t attempts_per_restart = 0;  // 0 selects 32 * k^n
  std::size_t restarts = 64;
};

// A weak antichain of exactly target_size points in [0,k)^n, built by
// rejection sampling and fully determined by the seed.
LatticePointSet random_weak_antichain(std::size_t n, Coord k, std::size_t target_size,
                                      std::uint64_t seed, const RandomAntichainOptions& options = {});

}  // namespace antichain
