// Copyright 2026 The CDS Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact solvers for small instances, used to certify the approximation
// algorithms. Everything here is exponential and guarded by a size limit.

#ifndef CDS_ORACLE_HPP_
#define CDS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cds/core.hpp"

namespace cds {

inline constexpr std::size_t kExactMaxItems = 20;
inline constexpr std::size_t kBruteEtMaxItems = 9;
inline constexpr std::size_t kBruteBinMaxItems = 12;
inline constexpr Time kBruteBinMaxDue = 10'000;

/// Single-bin feasibility of every subset of a small instance, indexed by
/// bitmask over canonical positions.
class SubsetFeasibility {
 public:
  /// Throws CapacityError if n > kExactMaxItems.
  explicit SubsetFeasibility(const Instance& instance);

  std::size_t item_count() const { return n_; }
  bool feasible(std::uint32_t mask) const { return feasible_[mask] != 0; }
  const Cost& min_cost(std::uint32_t mask) const { return min_cost_[mask]; }
  Time best_time(std::uint32_t mask) const { return best_time_[mask]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> feasible_;
  std::vector<Cost> min_cost_;
  std::vector<Time> best_time_;
};

struct ExactSolution {
  std::size_t min_bins = 0;
  Schedule schedule;
};

/// Minimum bin count by dynamic programming over item subsets. Each bin is
/// delivered at its optimal (lower median) time. Throws CapacityError for
/// n > kExactMaxItems.
ExactSolution exact_min_bins(const Instance& instance);

/// Minimum total distance over all segmentations of the canonical order into
/// at most k contiguous segments, each served from one integer time within B
/// of all its items, found by exhaustive search. nullopt if infeasible.
/// Throws CapacityError for n > kBruteEtMaxItems and StructuralError unless
/// 1 <= k <= n.
std::optional<Cost> brute_et(const Instance& instance, std::size_t k);

/// Scans every integer time between the smallest and largest due time and
/// keeps the first minimum.
TimedCost brute_bin_time(std::span<const Time> dues);

}  // namespace cds

#endif  // CDS_ORACLE_HPP_
