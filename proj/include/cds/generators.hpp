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

// Deterministic instance families with known good schedules, plus seeded
// random instances. Item ids are assigned 0, 1, 2, ... in construction order.

#ifndef CDS_GENERATORS_HPP_
#define CDS_GENERATORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cds/core.hpp"

namespace cds {

/// Generators refuse to materialise more items than this.
inline constexpr std::uint64_t kMaxGeneratedItems = 100'000'000;

struct GeneratedInstance {
  Instance instance;
  std::optional<Schedule> certificate;
  /// Validation of the certificate against the instance, when there is one.
  std::optional<ValidationReport> certificate_report;
};

/// Item counts per due time for the early-delivery counterexample:
/// 1, 2, then 4^(t-1) times the sum of all earlier counts.
/// Throws StructuralError unless 2 <= ell <= 6.
std::vector<std::uint64_t> theorem3_group_sizes(int ell);

/// Smallest B >= n^2 * ell divisible by every group size after the first.
Cost theorem3_default_bound(int ell);

/// Groups of items at times 0 = t_1 < t_2 < ... with gaps B / n_{t+1} + 1.
/// Early-policy greedy needs ell bins, yet everything fits in one bin at the
/// last time (the certificate). A custom bound must be >= n^2 * ell and
/// divisible by every group size after the first.
GeneratedInstance gen_theorem3(int ell, std::optional<Cost> bound = std::nullopt);

/// Median-policy lower-bound family for lambda with sqrt(lambda - 1)
/// integral: k = sqrt(lambda - 1) runs of 2*lambda consecutive due times,
/// then k groups of 2B + 1 identical due times, B = lambda^2. The
/// certificate is the literal k-bin grouping of the construction; it does
/// not partition the items and is reported as invalid.
GeneratedInstance gen_median_lb(std::int64_t lambda);

/// Scheduling instance encoding a 3-Partition instance (3m integers summing
/// to m * beta, each within [beta/4, beta/2]). All times and the bound are
/// multiplied by 3 * m * beta so they are integral. When `partition` (m
/// index triples into `a`) is supplied, the certificate delivers triple j
/// together with the j-th block of identical items at that block's time.
GeneratedInstance gen_3partition(
    std::span<const std::int64_t> a, std::int64_t beta,
    std::optional<std::vector<std::array<std::size_t, 3>>> partition =
        std::nullopt);

/// n due times drawn uniformly from [0, max_due] by std::mt19937_64.
Instance gen_random(std::size_t n, Time max_due, Cost bound,
                    std::uint64_t seed);

/// Uniform integer in [0, range) by rejection; identical on every platform.
/// Throws StructuralError if range is 0.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t range);

}  // namespace cds

#endif  // CDS_GENERATORS_HPP_
