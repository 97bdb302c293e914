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

// Decoupled scheduling: first choose k delivery times minimising the total
// distance of due times to their nearest delivery time (every item within B
// of its time), then pack the items gathered at each time into bins. The
// best schedule over all k is returned.
//
// All item positions in this header are 0-based canonical indices, and
// segments are inclusive ranges [first, last].

#ifndef CDS_DECOUPLING_HPP_
#define CDS_DECOUPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cds/core.hpp"

namespace cds {

struct SegmentChoice {
  Time time = 0;  // clamped median of the segment
  Cost cost;      // sum of |d - time| over the segment

  friend bool operator==(const SegmentChoice&, const SegmentChoice&) = default;
};

/// Cost of serving canonical items [first, last] from one delivery time that
/// keeps every item within B. nullopt means infinite: first > last or the
/// due-time span exceeds 2B. Throws StructuralError if last >= n.
///
/// The time is the segment's lower median clamped into the window
/// [d_last - B, d_first + B].
std::optional<SegmentChoice> segment_cost(const Instance& instance,
                                          std::size_t first, std::size_t last);

struct Segment {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Solution of the bounded k-times subproblem. `segments[t]` is served from
/// `times[t]`; times are strictly increasing (adjacent segments that landed
/// on the same time are merged, so there may be fewer than k of them).
struct EtPlan {
  std::size_t k = 0;
  std::vector<Segment> segments;
  std::vector<Time> times;
  Cost total_cost;
};

/// Dynamic program over prefix/time-count pairs:
///   P(i, j) = min_{1 <= h <= i} P(h-1, j-1) + Q(h, i),  P(0, j) = 0.
/// Columns are built lazily, so asking for plans with k = 1, 2, ... costs
/// one column each. O(n^2) per column in the worst case.
class EtSolver {
 public:
  explicit EtSolver(const Instance& instance);

  /// nullopt if no set of at most k times keeps every item within B.
  /// Throws StructuralError unless 1 <= k <= n.
  std::optional<EtPlan> plan(std::size_t k);

  /// P(n, k); nullopt for infinity.
  const std::optional<Cost>& optimum(std::size_t k);

 private:
  void extend_to(std::size_t k);

  const Instance& instance_;
  std::vector<std::size_t> window_start_;  // first h with d_i - d_h <= 2B
  // cost_[j][i] = P(i, j) for i in 0..n; choice_[j][i] = h (1-based).
  std::vector<std::vector<std::optional<Cost>>> cost_;
  std::vector<std::vector<std::uint32_t>> choice_;
};

std::optional<EtPlan> et_dp(const Instance& instance, std::size_t k);

/// Items gathered at one delivery time, as ascending canonical indices.
struct TimeGroup {
  Time time = 0;
  std::vector<std::size_t> items;

  friend bool operator==(const TimeGroup&, const TimeGroup&) = default;
};

/// Sends every item to its closest plan time, ties to the earlier time.
/// Times that attract no item are dropped.
std::vector<TimeGroup> nearest_assign(const Instance& instance,
                                      const EtPlan& plan);

/// First-fit decreasing: sizes are visited in non-increasing order (ties by
/// position) and each goes into the first bin with room. Returns, per bin,
/// the positions of its sizes. Throws StructuralError if a size exceeds the
/// capacity.
std::vector<std::vector<std::size_t>> first_fit_decreasing(
    std::span<const Cost> sizes, const Cost& capacity);

/// Packs a group into bins delivered at the group's time, item sizes being
/// their distances to that time.
std::vector<BinDelivery> first_fit_pack(const Instance& instance,
                                        const TimeGroup& group);

/// Splits an overloaded group. Items due no later than the group time are
/// cut, from the earliest due time forward, into minimal runs whose
/// distance to the group time exceeds B; each run is delivered at the due
/// time of its last item. Items due after the group time get the mirror
/// treatment from the latest due time backward. What is left goes into one
/// bin at the group time, or two if one would exceed B.
std::vector<BinDelivery> refine_group(const Instance& instance,
                                      const TimeGroup& group);

struct DecouplingResult {
  Schedule schedule;
  std::size_t k = 0;  // time count of the winning iteration
};

/// Best schedule over k = 1..n. Iterations with k >= the best bin count so
/// far cannot win and are skipped; ties keep the smaller k.
DecouplingResult run_decoupling(const Instance& instance, bool refine);

Schedule solve_decoupling(const Instance& instance);
Schedule solve_refined(const Instance& instance);

}  // namespace cds

#endif  // CDS_DECOUPLING_HPP_
