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

#include "cds/core.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cds {

Instance::Instance(std::vector<Item> items, Cost bound,
                   std::optional<InstanceMetadata> metadata)
    : items_(std::move(items)),
      bound_(std::move(bound)),
      metadata_(std::move(metadata)) {
  if (items_.empty()) throw StructuralError("instance has no items");
  std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
    return std::tie(a.due, a.id) < std::tie(b.due, b.id);
  });
  dues_.reserve(items_.size());
  prefix_.reserve(items_.size() + 1);
  prefix_.emplace_back(0);
  index_.reserve(items_.size());
  for (std::size_t k = 0; k < items_.size(); ++k) {
    const Item& it = items_[k];
    if (it.due < 0) {
      throw StructuralError("item " + std::to_string(it.id) +
                            " has a negative due time");
    }
    if (!index_.emplace(it.id, k).second) {
      throw StructuralError("duplicate item id " + std::to_string(it.id));
    }
    dues_.push_back(it.due);
    prefix_.push_back(prefix_.back() + Cost(static_cast<std::uint64_t>(it.due)));
  }
}

std::optional<std::size_t> Instance::find(ItemId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Instance::index_of(ItemId id) const {
  const auto k = find(id);
  if (!k) throw StructuralError("unknown item id " + std::to_string(id));
  return *k;
}

Cost Instance::range_cost(std::size_t first, std::size_t last,
                          Time time) const {
  if (first > last || last > items_.size()) {
    throw StructuralError("item range out of bounds");
  }
  const auto begin = dues_.begin();
  const std::size_t split = static_cast<std::size_t>(
      std::upper_bound(begin + first, begin + last, time) - begin);
  using Rep = Cost::Rep;
  const Rep t(time);
  const Rep below = t * Rep(split - first) -
                    (prefix_[split].value() - prefix_[first].value());
  const Rep above = (prefix_[last].value() - prefix_[split].value()) -
                    t * Rep(last - split);
  return Cost(below + above);
}

const char* to_string(StructureClass c) {
  switch (c) {
    case StructureClass::kSequential:
      return "sequential";
    case StructureClass::kNested:
      return "nested";
    case StructureClass::kOther:
      return "other";
  }
  return "?";
}

Cost item_cost(Time due, Time time) { return Cost::distance(due, time); }

Cost bin_cost(const Instance& instance, std::span<const ItemId> item_ids,
              Time time) {
  Cost total;
  for (const ItemId id : item_ids) {
    total += item_cost(instance.due(instance.index_of(id)), time);
  }
  return total;
}

TimedCost optimal_time_for_dues(std::span<const Time> dues) {
  if (dues.empty()) throw StructuralError("empty subset has no delivery time");
  std::vector<Time> sorted(dues.begin(), dues.end());
  // Lower median e_{ceil(q/2)} (1-based) is index (q-1)/2.
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>((sorted.size() - 1) / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const Time median = *mid;
  Cost cost;
  for (const Time d : sorted) cost += item_cost(d, median);
  return {median, cost};
}

TimedCost optimal_bin_time(const Instance& instance,
                           std::span<const ItemId> item_ids) {
  std::vector<Time> dues;
  dues.reserve(item_ids.size());
  for (const ItemId id : item_ids) {
    dues.push_back(instance.due(instance.index_of(id)));
  }
  return optimal_time_for_dues(dues);
}

ValidationReport validate(const Instance& instance, const Schedule& schedule) {
  ValidationReport report;
  std::vector<std::uint32_t> seen(instance.size(), 0);
  report.bin_costs.reserve(schedule.bins.size());
  for (std::size_t j = 0; j < schedule.bins.size(); ++j) {
    const BinDelivery& bin = schedule.bins[j];
    if (bin.item_ids.empty()) report.empty_bins.push_back(j);
    if (bin.time < 0) report.negative_time_bins.push_back(j);
    Cost cost;
    for (const ItemId id : bin.item_ids) {
      const auto k = instance.find(id);
      if (!k) {
        report.unknown.push_back(id);
        continue;
      }
      if (++seen[*k] == 2) report.duplicated.push_back(id);
      cost += item_cost(instance.due(*k), bin.time);
    }
    if (cost > instance.bound()) report.over_bound.push_back({j, cost});
    report.total_cost += cost;
    report.bin_costs.push_back(std::move(cost));
  }
  for (std::size_t k = 0; k < instance.size(); ++k) {
    if (seen[k] == 0) report.missing.push_back(instance.item(k).id);
  }
  return report;
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  auto list = [&out](const char* label, const auto& values) {
    if (values.empty()) return;
    out << label << ":";
    for (const auto& v : values) out << ' ' << v;
    out << '\n';
  };
  list("missing items", missing);
  list("duplicated items", duplicated);
  list("unknown items", unknown);
  list("empty bins", empty_bins);
  list("bins with negative time", negative_time_bins);
  for (const auto& ob : over_bound) {
    out << "bin " << ob.bin << " cost " << ob.cost.str()
        << " exceeds bound\n";
  }
  out << (feasible() ? "feasible" : "infeasible") << ": " << bin_costs.size()
      << " bins, total cost " << total_cost.str() << '\n';
  return out.str();
}

namespace {

struct Span {
  Time lo = 0;
  Time hi = 0;
  Time time = 0;
};

std::vector<Span> bin_spans(const Instance& instance,
                            const Schedule& schedule) {
  std::vector<Span> spans;
  spans.reserve(schedule.bins.size());
  for (const BinDelivery& bin : schedule.bins) {
    Span s{instance.due(instance.index_of(bin.item_ids.front())), 0, bin.time};
    s.hi = s.lo;
    for (const ItemId id : bin.item_ids) {
      const Time d = instance.due(instance.index_of(id));
      s.lo = std::min(s.lo, d);
      s.hi = std::max(s.hi, d);
    }
    spans.push_back(s);
  }
  return spans;
}

}  // namespace

StructureClass classify(const Instance& instance, const Schedule& schedule) {
  if (!validate(instance, schedule).partition_ok()) {
    throw StructuralError("classify requires a partition of the items");
  }
  std::vector<Span> spans = bin_spans(instance, schedule);

  // Only bins whose intervals are the same single point may be reordered
  // freely; everywhere else the interval order is forced, so sorting by
  // (lo, hi, time) finds a valid ordering whenever one exists.
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return std::tie(a.lo, a.hi, a.time) < std::tie(b.lo, b.hi, b.time);
  });
  bool sequential = true;
  for (std::size_t j = 1; j < spans.size() && sequential; ++j) {
    sequential = spans[j - 1].hi <= spans[j].lo &&
                 spans[j - 1].time <= spans[j].time;
  }
  if (sequential) return StructureClass::kSequential;

  for (std::size_t a = 0; a < spans.size(); ++a) {
    for (std::size_t b = a + 1; b < spans.size(); ++b) {
      const Span& x = spans[a];
      const Span& y = spans[b];
      const bool disjoint = x.hi < y.lo || y.hi < x.lo;
      const bool contained = (x.lo <= y.lo && y.hi <= x.hi) ||
                             (y.lo <= x.lo && x.hi <= y.hi);
      if (!disjoint && !contained) return StructureClass::kOther;
    }
  }
  return StructureClass::kNested;
}

Cost total_cost(const Instance& instance, const Schedule& schedule) {
  Cost total;
  for (const BinDelivery& bin : schedule.bins) {
    total += bin_cost(instance, bin.item_ids, bin.time);
  }
  return total;
}

}  // namespace cds
