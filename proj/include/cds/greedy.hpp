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

// One-pass first-fit over due-sorted items. The current bin absorbs the next
// item as long as the scheduling policy can still deliver the enlarged bin
// within the bound; otherwise a new bin is opened.

#ifndef CDS_GREEDY_HPP_
#define CDS_GREEDY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "cds/core.hpp"

namespace cds {

enum class SchedulingPolicy {
  kEarly,      // deliver at the earliest due time of the bin
  kEarlyLate,  // odd bins early, even bins at the latest due time
  kMedian,     // deliver at the lower median due time
};

const char* to_string(SchedulingPolicy policy);
std::optional<SchedulingPolicy> parse_policy(std::string_view name);

struct PolicyEvaluation {
  Time time = 0;
  Cost cost;

  friend bool operator==(const PolicyEvaluation&,
                         const PolicyEvaluation&) = default;
};

/// Prices a candidate bin. `bin_index` is 1-based; `sorted_dues` must be in
/// non-decreasing order. Throws StructuralError on an empty subset.
PolicyEvaluation evaluate_policy(SchedulingPolicy policy,
                                 std::size_t bin_index,
                                 std::span<const Time> sorted_dues);

Schedule solve_sequential(const Instance& instance, SchedulingPolicy policy);

}  // namespace cds

#endif  // CDS_GREEDY_HPP_
