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


#include <algorithm>
#include <numeric>
#include <random>

#include "cds/decoupling.hpp"
#include "cds/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "reference.hpp"

using cds::Cost;
using cds::EtPlan;
using cds::SegmentChoice;
using cds::TimeGroup;
using testing::bin_dues;
using testing::C;
using testing::make_instance;

namespace {

std::uint64_t u(std::int64_t v) { return static_cast<std::uint64_t>(v); }

TimeGroup whole_group(const cds::Instance& inst, cds::Time time) {
  TimeGroup g{time, {}};
  for (std::size_t k = 0; k < inst.size(); ++k) g.items.push_back(k);
  return g;
}

}  // namespace

TEST_CASE("segment_cost examples") {
  const auto a = make_instance({0, 5, 6}, 4);
  CHECK(cds::segment_cost(a, 0, 2) == SegmentChoice{4, C(7)});
  const auto b = make_instance({10, 20}, 6);
  CHECK(cds::segment_cost(b, 0, 1) == SegmentChoice{14, C(10)});
  const auto c = make_instance({0, 20}, 6);
  CHECK_FALSE(cds::segment_cost(c, 0, 1).has_value());
  CHECK_FALSE(cds::segment_cost(c, 1, 0).has_value());
  CHECK_THROWS_AS(cds::segment_cost(c, 0, 2), cds::StructuralError);
}

TEST_CASE("segment_cost is the window minimum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto dues = ref::random_dues(rng, 1 + rng() % 8, 40);
    const std::int64_t bound = static_cast<std::int64_t>(rng() % 16);
    const auto inst = make_instance(dues, u(bound));
    const std::size_t h = rng() % inst.size();
    const std::size_t i = h + rng() % (inst.size() - h);
    const std::vector<std::int64_t> seg(inst.dues().begin() + h, inst.dues().begin() + i + 1);
    const auto got = cds::segment_cost(inst, h, i);
    const std::int64_t lo = seg.back() - bound;
    const std::int64_t hi = seg.front() + bound;
    if (lo > hi) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(got->time >= lo);
    CHECK(got->time <= hi);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t t = lo; t <= hi; ++t) best = std::min(best, ref::cost_at(seg, t));
    CHECK(got->cost == C(u(best)));
    CHECK(got->cost == C(u(ref::cost_at(seg, got->time))));
  }
}

TEST_CASE("et_dp examples") {
  const auto inst = make_instance({0, 10, 20}, 6);
  const auto two = cds::et_dp(inst, 2);
  REQUIRE(two.has_value());
  CHECK(two->total_cost == C(10));
  CHECK(two->times.size() == 2);
  CHECK_FALSE(cds::et_dp(inst, 1).has_value());
  const auto three = cds::et_dp(inst, 3);
  REQUIRE(three.has_value());
  CHECK(three->total_cost == C(0));
  CHECK(three->times == std::vector<cds::Time>{0, 10, 20});
  CHECK_THROWS_AS(cds::et_dp(inst, 0), cds::StructuralError);
  CHECK_THROWS_AS(cds::et_dp(inst, 4), cds::StructuralError);
}

TEST_CASE("et_dp merges segments that share a time") {
  const auto inst = make_instance({5, 5, 5}, 0);
  const auto plan = cds::et_dp(inst, 3);
  REQUIRE(plan.has_value());
  CHECK(plan->times == std::vector<cds::Time>{5});
  CHECK(plan->segments == std::vector<cds::Segment>{{0, 2}});
}

TEST_CASE("et_dp agrees with the time-set enumeration") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const auto dues = ref::random_dues(rng, 1 + rng() % 6, 40);
    const std::int64_t bound = 3 + static_cast<std::int64_t>(rng() % 13);
    const auto inst = make_instance(dues, u(bound));
    cds::EtSolver solver(inst);
    std::optional<Cost> previous;
    for (std::size_t k = 1; k <= inst.size(); ++k) {
      const auto want = ref::et_by_time_sets(dues, bound, k);
      const auto plan = solver.plan(k);
      REQUIRE(plan.has_value() == want.has_value());
      if (!plan) continue;
      CHECK(plan->total_cost == C(u(*want)));
      if (previous) CHECK(plan->total_cost <= *previous);
      previous = plan->total_cost;
      // The plan's own bookkeeping: strictly increasing times, segments
      // tile the items, every item within B, costs add up.
      for (std::size_t t = 1; t < plan->times.size(); ++t) {
        CHECK(plan->times[t - 1] < plan->times[t]);
      }
      Cost sum;
      std::size_t next = 0;
      for (std::size_t t = 0; t < plan->segments.size(); ++t) {
        CHECK(plan->segments[t].first == next);
        for (std::size_t x = plan->segments[t].first; x <= plan->segments[t].last; ++x) {
          const Cost d = cds::item_cost(inst.due(x), plan->times[t]);
          CHECK(d <= inst.bound());
          sum += d;
        }
        next = plan->segments[t].last + 1;
      }
      CHECK(next == inst.size());
      CHECK(sum == plan->total_cost);
    }
  }
}

TEST_CASE("et_dp agrees with brute_et") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dues = ref::random_dues(rng, 1 + rng() % 9, 40);
    const auto inst = make_instance(dues, 3 + rng() % 13);
    for (std::size_t k = 1; k <= inst.size(); ++k) {
      const auto plan = cds::et_dp(inst, k);
      const auto want = cds::brute_et(inst, k);
      REQUIRE(plan.has_value() == want.has_value());
      if (plan) CHECK(plan->total_cost == *want);
    }
  }
}

TEST_CASE("nearest_assign") {
  const auto inst = make_instance({10, 12, 3, 25}, 10);
  EtPlan plan;
  plan.times = {4, 20};
  const auto groups = cds::nearest_assign(inst, plan);
  REQUIRE(groups.size() == 2);
  // canonical order: 3, 10, 12, 25
  CHECK(groups[0] == TimeGroup{4, {0, 1, 2}});
  CHECK(groups[1] == TimeGroup{20, {3}});
  plan.times = {7};
  CHECK(cds::nearest_assign(inst, plan) == std::vector<TimeGroup>{{7, {0, 1, 2, 3}}});
  plan.times = {0, 11, 40};
  const auto dropped = cds::nearest_assign(inst, plan);
  REQUIRE(dropped.size() == 2);
  CHECK(dropped[0].time == 0);
  CHECK(dropped[1] == TimeGroup{11, {1, 2, 3}});
}

TEST_CASE("first_fit_decreasing examples") {
  const std::vector<Cost> a{C(3), C(3), C(3)};
  CHECK(cds::first_fit_decreasing(a, C(5)).size() == 3);
  const std::vector<Cost> b{C(2), C(2)};
  CHECK(cds::first_fit_decreasing(b, C(5)).size() == 1);
  const std::vector<Cost> z{C(0), C(0), C(0)};
  CHECK(cds::first_fit_decreasing(z, C(0)).size() == 1);
  const std::vector<Cost> big{C(6)};
  CHECK_THROWS_AS(cds::first_fit_decreasing(big, C(5)), cds::StructuralError);
  CHECK(cds::first_fit_decreasing({}, C(5)).empty());
}

TEST_CASE("first_fit_decreasing bound and pairwise property") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t cap = 1 + static_cast<std::int64_t>(rng() % 50);
    std::vector<std::int64_t> sizes(1 + rng() % 25);
    for (auto& s : sizes) s = static_cast<std::int64_t>(rng() % u(cap + 1));
    std::vector<Cost> costs;
    for (auto s : sizes) costs.push_back(C(u(s)));
    const auto bins = cds::first_fit_decreasing(costs, C(u(cap)));
    std::vector<std::int64_t> loads;
    for (const auto& b : bins) {
      std::int64_t l = 0;
      for (auto p : b) l += sizes[p];
      CHECK(l <= cap);
      loads.push_back(l);
    }
    const std::int64_t total = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
    CHECK(static_cast<std::int64_t>(bins.size()) * cap <= 2 * total + cap);
    for (std::size_t x = 0; x < loads.size(); ++x) {
      for (std::size_t y = x + 1; y < loads.size(); ++y) CHECK(loads[x] + loads[y] > cap);
    }
    auto sorted = sizes;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    CHECK(bins.size() == ref::first_fit_loads(sorted, cap).size());
  }
}

TEST_CASE("first_fit_pack delivers at the group time") {
  const auto inst = make_instance({7, 10, 13, 10}, 5);
  const auto bins = cds::first_fit_pack(inst, whole_group(inst, 10));
  REQUIRE(bins.size() == 2);
  for (const auto& b : bins) CHECK(b.time == 10);
  CHECK(bin_dues(inst, bins[0]) == std::vector<std::int64_t>{7, 10, 10});
  CHECK(bin_dues(inst, bins[1]) == std::vector<std::int64_t>{13});
}

TEST_CASE("refine_group examples") {
  SUBCASE("early side trace") {
    const auto inst = make_instance({4, 6, 8, 9}, 5);
    const auto bins = cds::refine_group(inst, whole_group(inst, 10));
    REQUIRE(bins.size() == 3);
    CHECK(bin_dues(inst, bins[0]) == std::vector<std::int64_t>{4});
    CHECK(bins[0].time == 4);
    CHECK(bin_dues(inst, bins[1]) == std::vector<std::int64_t>{6, 8});
    CHECK(bins[1].time == 8);
    CHECK(bin_dues(inst, bins[2]) == std::vector<std::int64_t>{9});
    CHECK(bins[2].time == 10);
  }
  SUBCASE("within bound is one bin") {
    const auto inst = make_instance({8, 10, 11}, 5);
    const auto bins = cds::refine_group(inst, whole_group(inst, 10));
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].time == 10);
    CHECK(bins[0].item_ids.size() == 3);
  }
  SUBCASE("two residual bins") {
    const auto inst = make_instance({7, 13}, 5);
    const auto bins = cds::refine_group(inst, whole_group(inst, 10));
    REQUIRE(bins.size() == 2);
    CHECK(bins[0].time == 10);
    CHECK(bins[1].time == 10);
  }
  SUBCASE("late side mirrors the early side") {
    const auto inst = make_instance({11, 12, 14, 16}, 5);
    const auto bins = cds::refine_group(inst, whole_group(inst, 10));
    REQUIRE(bins.size() == 3);
    CHECK(bin_dues(inst, bins[0]) == std::vector<std::int64_t>{16});
    CHECK(bins[0].time == 16);
    CHECK(bin_dues(inst, bins[1]) == std::vector<std::int64_t>{14, 12});
    CHECK(bins[1].time == 12);
    CHECK(bin_dues(inst, bins[2]) == std::vector<std::int64_t>{11});
  }
}

TEST_CASE("refine_group properties") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t time = 30;
    std::vector<std::int64_t> dues(1 + rng() % 15);
    for (auto& d : dues) d = time - bound + static_cast<std::int64_t>(rng() % u(2 * bound + 1));
    const auto inst = make_instance(dues, u(bound));
    const auto bins = cds::refine_group(inst, whole_group(inst, time));
    cds::Schedule s{bins};
    CHECK(cds::validate(inst, s).feasible());
    std::int64_t total = 0;
    for (auto d : dues) total += d > time ? d - time : time - d;
    CHECK(static_cast<std::int64_t>(bins.size()) <= total / bound + 1);
  }
}

TEST_CASE("solve_decoupling and solve_refined examples") {
  const auto inst = make_instance({0, 1, 2, 10, 11}, 4);
  CHECK(cds::solve_decoupling(inst).bin_count() == 2);
  CHECK(cds::solve_refined(inst).bin_count() == 2);
  const auto one = make_instance({9}, 3);
  const auto s = cds::solve_decoupling(one);
  REQUIRE(s.bin_count() == 1);
  CHECK(s.bins[0].time == 9);
  const auto zeros = make_instance({0, 0, 0, 0}, 0);
  const auto z = cds::solve_decoupling(zeros);
  REQUIRE(z.bin_count() == 1);
  CHECK(z.bins[0].time == 0);
}

TEST_CASE("refinement is a no-op when no group is overloaded") {
  const auto inst = make_instance({0, 1, 2, 20, 21, 40}, 5);
  const auto plain = cds::run_decoupling(inst, false);
  const auto refined = cds::run_decoupling(inst, true);
  CHECK(plain.schedule == refined.schedule);
  CHECK(plain.k == refined.k);
}

TEST_CASE("decoupling outputs are feasible and within the ratio bounds") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const auto dues = ref::random_dues(rng, 1 + rng() % 9, 60);
    const std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 30);
    const auto inst = make_instance(dues, u(bound));
    const std::size_t opt = ref::min_bins_by_partitions(dues, bound);
    const auto d = cds::solve_decoupling(inst);
    const auto r = cds::solve_refined(inst);
    CHECK(cds::validate(inst, d).feasible());
    CHECK(cds::validate(inst, r).feasible());
    CHECK(d.bin_count() <= 3 * opt);
    CHECK(r.bin_count() <= 2 * opt);
    CHECK(d.bin_count() >= opt);
  }
}
