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

#ifndef CDS_SOLVER_HPP_
#define CDS_SOLVER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "cds/core.hpp"

namespace cds {

enum class Algorithm { kEarly, kEarlyLate, kMedian, kDecoupling, kRefined, kExact };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

/// Dispatches to the greedy policies, the decoupling variants or the exact
/// oracle (which may throw CapacityError).
Schedule solve(const Instance& instance, Algorithm algorithm);

}  // namespace cds

#endif  // CDS_SOLVER_HPP_
