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

// JSON instance and solution files. Bounds and costs travel as decimal
// strings so they survive any width; unknown fields are rejected. The field
// layout is documented in README.md.

#ifndef CDS_IO_HPP_
#define CDS_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cds/core.hpp"

namespace cds::io {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HashMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string instance_to_json(const Instance& instance);
/// Throws ParseError (malformed document) or StructuralError (bad items).
Instance instance_from_json(std::string_view text);

/// SHA-256 (hex) of the canonical instance bytes: bound and (id, due) pairs
/// in canonical order. Metadata does not take part.
std::string instance_hash(const Instance& instance);

struct SolutionFile {
  std::string instance_hash;
  std::string algorithm;
  Schedule schedule;
  std::vector<Cost> bin_costs;  // as recorded
  std::size_t total_bins = 0;
  Cost total_cost;
  bool feasible = false;
};

/// Fills in the hash, per-bin costs, totals and the feasibility flag.
SolutionFile make_solution(const Instance& instance, Schedule schedule,
                           std::string algorithm);

std::string solution_to_json(const SolutionFile& solution);
/// Throws ParseError, or HashMismatch if the file was written for another
/// instance.
SolutionFile solution_from_json(std::string_view text, const Instance& instance);

/// Recorded values that the instance does not reproduce (bin costs, totals,
/// feasibility flag). Empty when everything re-derives.
std::vector<std::string> recorded_mismatches(const Instance& instance,
                                             const SolutionFile& solution);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cds::io

#endif  // CDS_IO_HPP_
