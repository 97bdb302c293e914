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

#include "cds/solver.hpp"

#include "cds/decoupling.hpp"
#include "cds/greedy.hpp"
#include "cds/oracle.hpp"

namespace cds {

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEarly:
      return "early";
    case Algorithm::kEarlyLate:
      return "early-late";
    case Algorithm::kMedian:
      return "median";
    case Algorithm::kDecoupling:
      return "decoupling";
    case Algorithm::kRefined:
      return "refined";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const Algorithm a : all_algorithms()) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll{
      Algorithm::kEarly,      Algorithm::kEarlyLate, Algorithm::kMedian,
      Algorithm::kDecoupling, Algorithm::kRefined,   Algorithm::kExact};
  return kAll;
}

Schedule solve(const Instance& instance, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEarly:
      return solve_sequential(instance, SchedulingPolicy::kEarly);
    case Algorithm::kEarlyLate:
      return solve_sequential(instance, SchedulingPolicy::kEarlyLate);
    case Algorithm::kMedian:
      return solve_sequential(instance, SchedulingPolicy::kMedian);
    case Algorithm::kDecoupling:
      return solve_decoupling(instance);
    case Algorithm::kRefined:
      return solve_refined(instance);
    case Algorithm::kExact:
      return exact_min_bins(instance).schedule;
  }
  throw StructuralError("unknown algorithm");
}

}  // namespace cds
