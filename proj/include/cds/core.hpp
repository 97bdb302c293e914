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

// Problem model for container delivery scheduling: items with due times are
// packed into bin deliveries, each bin delivered at one time, such that the
// inventory cost sum |d_i - time| of every bin stays within the bound B.

#ifndef CDS_CORE_HPP_
#define CDS_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cds/cost.hpp"

namespace cds {

/// Malformed input: unknown ids, empty subsets, out-of-range indices,
/// violated generator parameters.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact solver or brute-force verifier was asked to go beyond its guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

using ItemId = std::uint64_t;

struct Item {
  ItemId id = 0;
  Time due = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Provenance of generated instances. Not part of the instance identity.
struct InstanceMetadata {
  std::string family;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InstanceMetadata&,
                         const InstanceMetadata&) = default;
};

/// An immutable problem instance in canonical form: items sorted by due time,
/// ties broken by id. Every index-based algorithm works on this order.
class Instance {
 public:
  /// Throws StructuralError on empty item list, negative due time or a
  /// duplicated id.
  Instance(std::vector<Item> items, Cost bound,
           std::optional<InstanceMetadata> metadata = std::nullopt);

  std::size_t size() const { return items_.size(); }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(std::size_t index) const { return items_[index]; }
  Time due(std::size_t index) const { return items_[index].due; }
  const std::vector<Time>& dues() const { return dues_; }
  const Cost& bound() const { return bound_; }
  const std::optional<InstanceMetadata>& metadata() const { return metadata_; }

  /// Canonical position of an id; nullopt if the id is not in the instance.
  std::optional<std::size_t> find(ItemId id) const;
  /// Canonical position of an id; throws StructuralError if unknown.
  std::size_t index_of(ItemId id) const;

  /// Exact sum of |d - time| over the canonical range [first, last).
  /// O(log n) through prefix sums.
  Cost range_cost(std::size_t first, std::size_t last, Time time) const;

 private:
  std::vector<Item> items_;
  std::vector<Time> dues_;
  std::vector<Cost> prefix_;  // prefix_[k] = d_0 + ... + d_{k-1}
  Cost bound_;
  std::optional<InstanceMetadata> metadata_;
  std::unordered_map<ItemId, std::size_t> index_;
};

struct BinDelivery {
  std::vector<ItemId> item_ids;
  Time time = 0;

  friend bool operator==(const BinDelivery&, const BinDelivery&) = default;
};

struct Schedule {
  std::vector<BinDelivery> bins;

  std::size_t bin_count() const { return bins.size(); }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct TimedCost {
  Time time = 0;
  Cost cost;

  friend bool operator==(const TimedCost&, const TimedCost&) = default;
};

/// Everything wrong with a schedule. Nothing is thrown; an empty report means
/// the schedule is a feasible partition.
struct ValidationReport {
  struct OverBound {
    std::size_t bin = 0;
    Cost cost;
  };

  std::vector<ItemId> missing;      // instance items in no bin
  std::vector<ItemId> duplicated;   // items in more than one bin (or twice)
  std::vector<ItemId> unknown;      // ids not in the instance
  std::vector<std::size_t> empty_bins;
  std::vector<std::size_t> negative_time_bins;
  std::vector<OverBound> over_bound;
  std::vector<Cost> bin_costs;      // cost of every bin, unknown ids skipped
  Cost total_cost;

  bool partition_ok() const {
    return missing.empty() && duplicated.empty() && unknown.empty() &&
           empty_bins.empty() && negative_time_bins.empty();
  }
  bool feasible() const { return partition_ok() && over_bound.empty(); }
  std::string describe() const;
};

enum class StructureClass { kSequential, kNested, kOther };

const char* to_string(StructureClass c);

Cost item_cost(Time due, Time time);

/// Throws StructuralError on an unknown id.
Cost bin_cost(const Instance& instance, std::span<const ItemId> item_ids,
              Time time);

/// Lower median of the subset's due times together with the minimum
/// inventory cost. Throws StructuralError on an empty subset or unknown id.
TimedCost optimal_bin_time(const Instance& instance,
                           std::span<const ItemId> item_ids);

/// Same rule on a raw due-time multiset (any order).
TimedCost optimal_time_for_dues(std::span<const Time> dues);

ValidationReport validate(const Instance& instance, const Schedule& schedule);

/// Sequential takes precedence over nested. Throws StructuralError if the
/// schedule is not a partition of the instance.
StructureClass classify(const Instance& instance, const Schedule& schedule);

/// Total inventory cost of a schedule (unknown ids throw).
Cost total_cost(const Instance& instance, const Schedule& schedule);

}  // namespace cds

#endif  // CDS_CORE_HPP_
