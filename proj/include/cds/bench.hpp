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


// Benchmark harness: solves a corpus of generated instances with a set of
// algorithms and tabulates bin counts against the exact optimum.

#ifndef CDS_BENCH_HPP_
#define CDS_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cds/core.hpp"
#include "cds/solver.hpp"

namespace cds {

/// `count` random instances; n, B drawn uniformly from the closed ranges.
struct RandomSet {
  std::size_t count = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  Time max_due = 0;
  std::uint64_t bound_min = 0;
  std::uint64_t bound_max = 0;
  std::uint64_t seed = 0;
};

struct BenchSpec {
  std::vector<RandomSet> random;
  std::vector<int> theorem3;               // values of ell
  std::vector<std::int64_t> median_lb;     // values of lambda
  std::vector<Algorithm> algorithms;       // empty means every heuristic
  bool oracle = true;                      // compute the optimum when n <= 20
  bool timing = false;                     // fill wall_ms
};

/// Throws std::invalid_argument on unknown fields or bad values.
BenchSpec parse_bench_spec(std::string_view json_text);

struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::size_t bins = 0;
  Cost total_cost;
  std::optional<std::size_t> optimum;
  std::optional<double> wall_ms;

  std::optional<double> ratio() const;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> diagnostics;  // per-instance guard failures etc.

  /// Header, one line per row, then one summary line per algorithm with
  /// its worst ratio (instance column "max").
  std::string csv() const;
};

BenchResult run_bench(const BenchSpec& spec);

}  // namespace cds

#endif  // CDS_BENCH_HPP_
