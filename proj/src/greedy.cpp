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

#include "cds/greedy.hpp"

namespace cds {

const char* to_string(SchedulingPolicy policy) {
  switch (policy) {
    case SchedulingPolicy::kEarly:
      return "early";
    case SchedulingPolicy::kEarlyLate:
      return "early-late";
    case SchedulingPolicy::kMedian:
      return "median";
  }
  return "?";
}

std::optional<SchedulingPolicy> parse_policy(std::string_view name) {
  if (name == "early") return SchedulingPolicy::kEarly;
  if (name == "early-late" || name == "early_late") {
    return SchedulingPolicy::kEarlyLate;
  }
  if (name == "median") return SchedulingPolicy::kMedian;
  return std::nullopt;
}

namespace {

// Delivery time the policy picks for the sorted run [first, last).
template <typename DueAt>
Time policy_time(SchedulingPolicy policy, std::size_t bin_index,
                 std::size_t first, std::size_t last, DueAt due_at) {
  switch (policy) {
    case SchedulingPolicy::kEarly:
      return due_at(first);
    case SchedulingPolicy::kEarlyLate:
      return bin_index % 2 == 1 ? due_at(first) : due_at(last - 1);
    case SchedulingPolicy::kMedian:
      return due_at(first + (last - first - 1) / 2);
  }
  return due_at(first);
}

}  // namespace

PolicyEvaluation evaluate_policy(SchedulingPolicy policy,
                                 std::size_t bin_index,
                                 std::span<const Time> sorted_dues) {
  if (sorted_dues.empty()) {
    throw StructuralError("cannot schedule an empty bin");
  }
  if (bin_index == 0) throw StructuralError("bin index is 1-based");
  const Time time =
      policy_time(policy, bin_index, 0, sorted_dues.size(),
                  [&](std::size_t k) { return sorted_dues[k]; });
  Cost cost;
  for (const Time d : sorted_dues) cost += item_cost(d, time);
  return {time, cost};
}

Schedule solve_sequential(const Instance& instance, SchedulingPolicy policy) {
  // Bins are contiguous runs of the canonical order, so a candidate bin is
  // priced in O(log n) through the instance's prefix sums. This is exactly
  // the from-scratch evaluate_policy sum, only faster.
  const auto due_at = [&](std::size_t k) { return instance.due(k); };
  Schedule schedule;
  std::size_t first = 0;
  std::size_t bin_index = 1;
  Time time = instance.due(0);
  for (std::size_t next = 1; next < instance.size(); ++next) {
    const Time candidate =
        policy_time(policy, bin_index, first, next + 1, due_at);
    if (instance.range_cost(first, next + 1, candidate) > instance.bound()) {
      BinDelivery bin{{}, time};
      for (std::size_t k = first; k < next; ++k) {
        bin.item_ids.push_back(instance.item(k).id);
      }
      schedule.bins.push_back(std::move(bin));
      first = next;
      ++bin_index;
      time = policy_time(policy, bin_index, first, next + 1, due_at);
    } else {
      time = candidate;
    }
  }
  BinDelivery last{{}, time};
  for (std::size_t k = first; k < instance.size(); ++k) {
    last.item_ids.push_back(instance.item(k).id);
  }
  schedule.bins.push_back(std::move(last));
  return schedule;
}

}  // namespace cds
