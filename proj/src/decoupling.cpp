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

#include "cds/decoupling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cds {

using Rep = Cost::Rep;

std::optional<SegmentChoice> segment_cost(const Instance& instance,
                                          std::size_t first,
                                          std::size_t last) {
  if (last >= instance.size() || first >= instance.size()) {
    throw StructuralError("segment index out of range");
  }
  if (first > last) return std::nullopt;
  const Rep bound = instance.bound().value();
  const Rep lo_due(instance.due(first));
  const Rep hi_due(instance.due(last));
  if (hi_due - lo_due > 2 * bound) return std::nullopt;

  const Rep median(instance.due(first + (last - first) / 2));
  const Rep window_lo = hi_due - bound;
  const Rep window_hi = lo_due + bound;
  Rep time = median;
  if (median <= window_lo) {
    time = window_lo;
  } else if (median >= window_hi) {
    time = window_hi;
  }
  // The clamped time always lies in [d_first, d_last], so it fits a Time.
  const Time t = time.convert_to<Time>();
  return SegmentChoice{t, instance.range_cost(first, last + 1, t)};
}

EtSolver::EtSolver(const Instance& instance) : instance_(instance) {
  const std::size_t n = instance.size();
  const Rep span = 2 * instance.bound().value();
  const auto& dues = instance.dues();
  window_start_.resize(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const Rep threshold = Rep(dues[i - 1]) - span;
    if (threshold > 0) {
      const Time t = threshold.convert_to<Time>();
      window_start_[i] = static_cast<std::size_t>(
          std::lower_bound(dues.begin(), dues.end(), t) - dues.begin()) + 1;
    }
  }
  // Column 0: no times at all, only the empty prefix is coverable.
  cost_.emplace_back(n + 1);
  cost_[0][0] = Cost(0);
  choice_.emplace_back(n + 1, 0);
}

void EtSolver::extend_to(std::size_t k) {
  const std::size_t n = instance_.size();
  while (cost_.size() <= k) {
    const std::size_t j = cost_.size();
    const auto& prev = cost_[j - 1];
    std::vector<std::optional<Cost>> column(n + 1);
    std::vector<std::uint32_t> choice(n + 1, 0);
    column[0] = Cost(0);
    for (std::size_t i = 1; i <= n; ++i) {
      // Last segment is {h..i}; h = i is the singleton segment.
      for (std::size_t h = window_start_[i]; h <= i; ++h) {
        if (!prev[h - 1]) continue;
        const auto q = segment_cost(instance_, h - 1, i - 1);
        if (!q) continue;
        Cost candidate = *prev[h - 1] + q->cost;
        if (!column[i] || candidate < *column[i]) {
          column[i] = std::move(candidate);
          choice[i] = static_cast<std::uint32_t>(h);
        }
      }
    }
    cost_.push_back(std::move(column));
    choice_.push_back(std::move(choice));
  }
}

const std::optional<Cost>& EtSolver::optimum(std::size_t k) {
  if (k == 0 || k > instance_.size()) {
    throw StructuralError("time count k must lie in [1, n]");
  }
  extend_to(k);
  return cost_[k][instance_.size()];
}

std::optional<EtPlan> EtSolver::plan(std::size_t k) {
  const std::optional<Cost>& best = optimum(k);
  if (!best) return std::nullopt;

  std::vector<Segment> segments;
  std::size_t i = instance_.size();
  for (std::size_t j = k; i > 0; --j) {
    const std::size_t h = choice_[j][i];
    segments.push_back({h - 1, i - 1});
    i = h - 1;
  }
  std::reverse(segments.begin(), segments.end());

  EtPlan plan;
  plan.k = k;
  plan.total_cost = *best;
  for (const Segment& s : segments) {
    const Time t = segment_cost(instance_, s.first, s.last)->time;
    if (!plan.times.empty() && plan.times.back() == t) {
      plan.segments.back().last = s.last;
    } else {
      plan.times.push_back(t);
      plan.segments.push_back(s);
    }
  }
  return plan;
}

std::optional<EtPlan> et_dp(const Instance& instance, std::size_t k) {
  EtSolver solver(instance);
  return solver.plan(k);
}

std::vector<TimeGroup> nearest_assign(const Instance& instance,
                                      const EtPlan& plan) {
  const auto& times = plan.times;
  std::vector<TimeGroup> groups(times.size());
  for (std::size_t t = 0; t < times.size(); ++t) groups[t].time = times[t];
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const Time d = instance.due(k);
    const auto above = std::lower_bound(times.begin(), times.end(), d);
    std::size_t t = static_cast<std::size_t>(above - times.begin());
    if (above == times.end()) {
      t = times.size() - 1;
    } else if (above != times.begin()) {
      const Time before = *(above - 1);
      // Ties go to the earlier time.
      if (d - before <= *above - d) --t;
    }
    groups[t].items.push_back(k);
  }
  std::erase_if(groups, [](const TimeGroup& g) { return g.items.empty(); });
  return groups;
}

std::vector<std::vector<std::size_t>> first_fit_decreasing(
    std::span<const Cost> sizes, const Cost& capacity) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  std::vector<std::vector<std::size_t>> bins;
  std::vector<Cost> loads;
  for (const std::size_t k : order) {
    if (sizes[k] > capacity) {
      throw StructuralError("item size " + sizes[k].str() +
                            " exceeds capacity " + capacity.str());
    }
    std::size_t b = 0;
    while (b < bins.size() && loads[b] + sizes[k] > capacity) ++b;
    if (b == bins.size()) {
      bins.emplace_back();
      loads.emplace_back(0);
    }
    bins[b].push_back(k);
    loads[b] += sizes[k];
  }
  return bins;
}

std::vector<BinDelivery> first_fit_pack(const Instance& instance,
                                        const TimeGroup& group) {
  std::vector<Cost> sizes;
  sizes.reserve(group.items.size());
  for (const std::size_t k : group.items) {
    sizes.push_back(item_cost(instance.due(k), group.time));
  }
  std::vector<BinDelivery> out;
  for (const auto& positions : first_fit_decreasing(sizes, instance.bound())) {
    BinDelivery bin{{}, group.time};
    for (const std::size_t p : positions) {
      bin.item_ids.push_back(instance.item(group.items[p]).id);
    }
    out.push_back(std::move(bin));
  }
  return out;
}

namespace {

// Cuts `run` (ordered from farthest to nearest the group time) into minimal
// prefixes whose distance to `time` exceeds B. Returns the index of the first
// item left over.
std::size_t carve(const Instance& instance, std::span<const std::size_t> run,
                  Time time, std::vector<BinDelivery>& out) {
  const Cost& bound = instance.bound();
  Cost remaining;
  for (const std::size_t k : run) remaining += item_cost(instance.due(k), time);

  std::size_t h = 0;
  while (remaining > bound) {
    Cost prefix;
    std::size_t i = h;
    for (;; ++i) {
      prefix += item_cost(instance.due(run[i]), time);
      if (prefix > bound) break;
    }
    BinDelivery bin{{}, instance.due(run[i])};
    for (std::size_t g = h; g <= i; ++g) {
      bin.item_ids.push_back(instance.item(run[g]).id);
    }
    out.push_back(std::move(bin));
    remaining -= prefix;
    h = i + 1;
  }
  return h;
}

}  // namespace

std::vector<BinDelivery> refine_group(const Instance& instance,
                                      const TimeGroup& group) {
  std::vector<std::size_t> early;  // due <= time, ascending due
  std::vector<std::size_t> late;   // due > time, descending due
  for (const std::size_t k : group.items) {
    (instance.due(k) <= group.time ? early : late).push_back(k);
  }
  std::sort(early.begin(), early.end());
  std::sort(late.begin(), late.end(), std::greater<>());

  std::vector<BinDelivery> out;
  const std::size_t early_rest = carve(instance, early, group.time, out);
  const std::size_t late_rest = carve(instance, late, group.time, out);

  BinDelivery residue_early{{}, group.time};
  BinDelivery residue_late{{}, group.time};
  Cost residue_cost;
  for (std::size_t g = early_rest; g < early.size(); ++g) {
    residue_early.item_ids.push_back(instance.item(early[g]).id);
    residue_cost += item_cost(instance.due(early[g]), group.time);
  }
  for (std::size_t g = late_rest; g < late.size(); ++g) {
    residue_late.item_ids.push_back(instance.item(late[g]).id);
    residue_cost += item_cost(instance.due(late[g]), group.time);
  }
  if (residue_cost > instance.bound()) {
    out.push_back(std::move(residue_early));
    out.push_back(std::move(residue_late));
  } else {
    residue_early.item_ids.insert(residue_early.item_ids.end(),
                                  residue_late.item_ids.begin(),
                                  residue_late.item_ids.end());
    if (!residue_early.item_ids.empty()) out.push_back(std::move(residue_early));
  }
  return out;
}

DecouplingResult run_decoupling(const Instance& instance, bool refine) {
  EtSolver solver(instance);
  DecouplingResult best;
  std::size_t best_bins = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 1; k <= instance.size() && k < best_bins; ++k) {
    const auto plan = solver.plan(k);
    if (!plan) continue;
    Schedule schedule;
    for (const TimeGroup& group : nearest_assign(instance, *plan)) {
      std::vector<BinDelivery> bins;
      if (refine) {
        Cost load;
        for (const std::size_t i : group.items) {
          load += item_cost(instance.due(i), group.time);
        }
        // A group within B packs into a single bin either way.
        bins = load > instance.bound() ? refine_group(instance, group)
                                       : first_fit_pack(instance, group);
      } else {
        bins = first_fit_pack(instance, group);
      }
      for (auto& b : bins) schedule.bins.push_back(std::move(b));
    }
    if (schedule.bin_count() < best_bins) {
      best_bins = schedule.bin_count();
      best.schedule = std::move(schedule);
      best.k = k;
    }
  }
  return best;
}

Schedule solve_decoupling(const Instance& instance) {
  return run_decoupling(instance, false).schedule;
}

Schedule solve_refined(const Instance& instance) {
  return run_decoupling(instance, true).schedule;
}

}  // namespace cds
