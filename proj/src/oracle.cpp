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

#include "cds/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace cds {

SubsetFeasibility::SubsetFeasibility(const Instance& instance)
    : n_(instance.size()) {
  if (n_ > kExactMaxItems) {
    throw CapacityError("exact solver supports at most " +
                        std::to_string(kExactMaxItems) + " items, got " +
                        std::to_string(n_) +
                        "; use an approximation algorithm instead");
  }
  const std::uint32_t subsets = std::uint32_t{1} << n_;
  feasible_.assign(subsets, 0);
  min_cost_.assign(subsets, Cost(0));
  best_time_.assign(subsets, 0);
  feasible_[0] = 1;

  // Bits are canonical positions, so walking them low to high visits due
  // times in sorted order and the lower median is the ceil(q/2)-th set bit.
  std::vector<std::size_t> members;
  members.reserve(n_);
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    members.clear();
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    const Time median = instance.due(members[(members.size() - 1) / 2]);
    Cost cost;
    for (const std::size_t k : members) cost += item_cost(instance.due(k), median);
    feasible_[mask] = cost <= instance.bound() ? 1 : 0;
    best_time_[mask] = median;
    min_cost_[mask] = std::move(cost);
  }
}

ExactSolution exact_min_bins(const Instance& instance) {
  const SubsetFeasibility table(instance);
  const std::size_t n = instance.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

  // bins[mask]: fewest bins covering exactly `mask`; pick[mask]: the bin that
  // holds the lowest item of `mask` in such a cover.
  std::vector<std::uint8_t> bins(std::size_t{full} + 1, kUnreached);
  std::vector<std::uint32_t> pick(std::size_t{full} + 1, 0);
  bins[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Enumerate submasks of rest (including empty) and add the lowest item.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t bin = sub | low;
      if (table.feasible(bin)) {
        const std::uint8_t before = bins[mask ^ bin];
        if (before != kUnreached && before + 1 < bins[mask]) {
          bins[mask] = static_cast<std::uint8_t>(before + 1);
          pick[mask] = bin;
        }
      }
      if (sub == 0) break;
    }
  }

  ExactSolution out;
  out.min_bins = bins[full];
  for (std::uint32_t mask = full; mask != 0; mask ^= pick[mask]) {
    const std::uint32_t bin = pick[mask];
    BinDelivery delivery{{}, table.best_time(bin)};
    for (std::uint32_t rest = bin; rest != 0; rest &= rest - 1) {
      delivery.item_ids.push_back(
          instance.item(static_cast<std::size_t>(std::countr_zero(rest))).id);
    }
    out.schedule.bins.push_back(std::move(delivery));
  }
  return out;
}

namespace {

// Best integer time for canonical items [first, last], scanning every time
// at which all of them are within B.
std::optional<Cost> brute_segment(const Instance& instance, std::size_t first,
                                  std::size_t last) {
  const Cost::Rep bound = instance.bound().value();
  const Cost::Rep lo = std::max(Cost::Rep(0), Cost::Rep(instance.due(last)) - bound);
  const Cost::Rep hi = Cost::Rep(instance.due(first)) + bound;
  if (hi - lo > 1'000'000) {
    throw CapacityError("brute-force ET scan window too wide; lower B");
  }
  std::optional<Cost> best;
  for (Cost::Rep t = lo; t <= hi; ++t) {
    const Time time = t.convert_to<Time>();
    Cost cost;
    bool ok = true;
    for (std::size_t k = first; k <= last && ok; ++k) {
      const Cost d = item_cost(instance.due(k), time);
      ok = d <= instance.bound();
      cost += d;
    }
    if (ok && (!best || cost < *best)) best = cost;
  }
  return best;
}

}  // namespace

std::optional<Cost> brute_et(const Instance& instance, std::size_t k) {
  const std::size_t n = instance.size();
  if (n > kBruteEtMaxItems) {
    throw CapacityError("brute-force ET supports at most " +
                        std::to_string(kBruteEtMaxItems) + " items");
  }
  if (k == 0 || k > n) throw StructuralError("time count k must lie in [1, n]");

  // Bit g of `cuts` set means a segment ends after item g.
  std::optional<Cost> best;
  const std::uint32_t patterns = std::uint32_t{1} << (n - 1);
  for (std::uint32_t cuts = 0; cuts < patterns; ++cuts) {
    if (static_cast<std::size_t>(std::popcount(cuts)) + 1 > k) continue;
    Cost total;
    bool ok = true;
    std::size_t first = 0;
    for (std::size_t g = 0; g < n && ok; ++g) {
      const bool ends = g == n - 1 || ((cuts >> g) & 1U) != 0;
      if (!ends) continue;
      const auto seg = brute_segment(instance, first, g);
      ok = seg.has_value();
      if (ok) total += *seg;
      first = g + 1;
    }
    if (ok && (!best || total < *best)) best = total;
  }
  return best;
}

TimedCost brute_bin_time(std::span<const Time> dues) {
  if (dues.empty()) throw StructuralError("empty subset has no delivery time");
  if (dues.size() > kBruteBinMaxItems) {
    throw CapacityError("brute-force bin time supports at most " +
                        std::to_string(kBruteBinMaxItems) + " items");
  }
  const auto [lo, hi] = std::minmax_element(dues.begin(), dues.end());
  if (*lo < 0 || *hi > kBruteBinMaxDue) {
    throw CapacityError("brute-force bin time needs dues in [0, " +
                        std::to_string(kBruteBinMaxDue) + "]");
  }
  std::optional<TimedCost> best;
  for (Time t = *lo; t <= *hi; ++t) {
    Cost cost;
    for (const Time d : dues) cost += item_cost(d, t);
    if (!best || cost < best->cost) best = TimedCost{t, cost};
  }
  return *best;
}

}  // namespace cds
