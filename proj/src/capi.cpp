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


#include "cds/cds.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cds/bench.hpp"
#include "cds/core.hpp"
#include "cds/generators.hpp"
#include "cds/io.hpp"
#include "cds/solver.hpp"

struct cds_instance {
  cds::Instance instance;
};

struct cds_schedule {
  cds::io::SolutionFile solution;
  bool loaded = false;  // recorded costs came from a file and need checking
};

namespace {

thread_local std::string last_error;

cds_status fail(cds_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the library's exception types onto status codes.
template <typename F>
cds_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cds::io::HashMismatch& e) {
    return fail(CDS_HASH_MISMATCH, e.what());
  } catch (const cds::io::IoError& e) {
    return fail(CDS_IO, e.what());
  } catch (const cds::CapacityError& e) {
    return fail(CDS_CAPACITY, e.what());
  } catch (const cds::io::ParseError& e) {
    return fail(CDS_INVALID, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CDS_INVALID, e.what());
  } catch (const std::overflow_error& e) {
    return fail(CDS_INVALID, std::string("arithmetic overflow: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(CDS_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CDS_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cds_status null_arg(const char* name) {
  return fail(CDS_INVALID, std::string(name) + " must not be NULL");
}

cds_schedule* wrap(const cds::Instance& instance, cds::Schedule schedule,
                   std::string algorithm) {
  return new cds_schedule{
      cds::io::make_solution(instance, std::move(schedule), std::move(algorithm)),
      false};
}

cds_status emit_generated(cds::GeneratedInstance g, const char* family,
                          cds_instance** out, cds_schedule** certificate) {
  if (certificate != nullptr) {
    *certificate =
        g.certificate ? wrap(g.instance, std::move(*g.certificate), family) : nullptr;
  }
  *out = new cds_instance{std::move(g.instance)};
  return CDS_OK;
}

}  // namespace

extern "C" {

const char* cds_last_error(void) { return last_error.c_str(); }

const char* cds_status_name(cds_status status) {
  switch (status) {
    case CDS_OK: return "ok";
    case CDS_INFEASIBLE: return "infeasible";
    case CDS_INVALID: return "invalid";
    case CDS_CAPACITY: return "capacity";
    case CDS_HASH_MISMATCH: return "hash-mismatch";
    case CDS_IO: return "io";
    case CDS_INTERNAL: return "internal";
  }
  return "unknown";
}

void cds_string_free(char* s) { std::free(s); }

cds_status cds_instance_from_json(const char* text, cds_instance** out) {
  if (text == nullptr || out == nullptr) return null_arg("text/out");
  return guarded([&] {
    *out = new cds_instance{cds::io::instance_from_json(text)};
    return CDS_OK;
  });
}

cds_status cds_instance_load(const char* path, cds_instance** out) {
  if (path == nullptr || out == nullptr) return null_arg("path/out");
  return guarded([&] {
    *out = new cds_instance{cds::io::instance_from_json(cds::io::read_file(path))};
    return CDS_OK;
  });
}

cds_status cds_instance_save(const cds_instance* instance, const char* path) {
  if (instance == nullptr || path == nullptr) return null_arg("instance/path");
  return guarded([&] {
    cds::io::write_file(path, cds::io::instance_to_json(instance->instance));
    return CDS_OK;
  });
}

cds_status cds_instance_to_json(const cds_instance* instance, char** out) {
  if (instance == nullptr || out == nullptr) return null_arg("instance/out");
  return guarded([&] {
    *out = dup_string(cds::io::instance_to_json(instance->instance));
    return CDS_OK;
  });
}

cds_status cds_instance_hash(const cds_instance* instance, char** out) {
  if (instance == nullptr || out == nullptr) return null_arg("instance/out");
  return guarded([&] {
    *out = dup_string(cds::io::instance_hash(instance->instance));
    return CDS_OK;
  });
}

size_t cds_instance_size(const cds_instance* instance) {
  return instance == nullptr ? 0 : instance->instance.size();
}

void cds_instance_free(cds_instance* instance) { delete instance; }

cds_status cds_generate_theorem3(int ell, const char* bound_or_null,
                                 cds_instance** out, cds_schedule** certificate) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    std::optional<cds::Cost> bound;
    if (bound_or_null != nullptr) bound = cds::Cost::parse(bound_or_null);
    return emit_generated(cds::gen_theorem3(ell, bound), "certificate", out,
                          certificate);
  });
}

cds_status cds_generate_median_lb(int64_t lambda, cds_instance** out,
                                  cds_schedule** certificate) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    return emit_generated(cds::gen_median_lb(lambda), "certificate", out,
                          certificate);
  });
}

cds_status cds_generate_three_partition(const int64_t* a, size_t count,
                                        int64_t beta, const size_t* triples,
                                        cds_instance** out,
                                        cds_schedule** certificate) {
  if (a == nullptr || out == nullptr) return null_arg("a/out");
  return guarded([&] {
    std::optional<std::vector<std::array<std::size_t, 3>>> partition;
    if (triples != nullptr) {
      if (count % 3 != 0) {
        throw std::invalid_argument("a partition needs 3m values");
      }
      partition.emplace();
      for (size_t g = 0; g < count / 3; ++g) {
        partition->push_back({triples[3 * g], triples[3 * g + 1], triples[3 * g + 2]});
      }
    }
    return emit_generated(
        cds::gen_3partition(std::span<const int64_t>(a, count), beta, partition),
        "certificate", out, certificate);
  });
}

cds_status cds_generate_random(size_t n, int64_t max_due, const char* bound,
                               uint64_t seed, cds_instance** out) {
  if (bound == nullptr || out == nullptr) return null_arg("bound/out");
  return guarded([&] {
    *out = new cds_instance{
        cds::gen_random(n, max_due, cds::Cost::parse(bound), seed)};
    return CDS_OK;
  });
}

cds_status cds_solve(const cds_instance* instance, const char* algorithm,
                     cds_schedule** out) {
  if (instance == nullptr || algorithm == nullptr || out == nullptr) {
    return null_arg("instance/algorithm/out");
  }
  return guarded([&] {
    const auto alg = cds::parse_algorithm(algorithm);
    if (!alg) {
      return fail(CDS_INVALID, std::string("unknown algorithm '") + algorithm + "'");
    }
    *out = wrap(instance->instance, cds::solve(instance->instance, *alg),
                cds::to_string(*alg));
    return CDS_OK;
  });
}

cds_status cds_schedule_load(const cds_instance* instance, const char* path,
                             cds_schedule** out) {
  if (instance == nullptr || path == nullptr || out == nullptr) {
    return null_arg("instance/path/out");
  }
  return guarded([&] {
    *out = new cds_schedule{
        cds::io::solution_from_json(cds::io::read_file(path), instance->instance),
        true};
    return CDS_OK;
  });
}

cds_status cds_schedule_save(const cds_schedule* schedule, const char* path) {
  if (schedule == nullptr || path == nullptr) return null_arg("schedule/path");
  return guarded([&] {
    cds::io::write_file(path, cds::io::solution_to_json(schedule->solution));
    return CDS_OK;
  });
}

cds_status cds_schedule_to_json(const cds_schedule* schedule, char** out) {
  if (schedule == nullptr || out == nullptr) return null_arg("schedule/out");
  return guarded([&] {
    *out = dup_string(cds::io::solution_to_json(schedule->solution));
    return CDS_OK;
  });
}

size_t cds_schedule_bin_count(const cds_schedule* schedule) {
  return schedule == nullptr ? 0 : schedule->solution.schedule.bin_count();
}

cds_status cds_schedule_total_cost(const cds_schedule* schedule, char** out) {
  if (schedule == nullptr || out == nullptr) return null_arg("schedule/out");
  return guarded([&] {
    *out = dup_string(schedule->solution.total_cost.str());
    return CDS_OK;
  });
}

void cds_schedule_free(cds_schedule* schedule) { delete schedule; }

cds_status cds_validate(const cds_instance* instance, const cds_schedule* schedule,
                        char** report) {
  if (instance == nullptr || schedule == nullptr) return null_arg("instance/schedule");
  return guarded([&] {
    const cds::ValidationReport r =
        cds::validate(instance->instance, schedule->solution.schedule);
    std::string text;
    std::vector<std::string> mismatches;
    if (schedule->loaded) {
      mismatches = cds::io::recorded_mismatches(instance->instance, schedule->solution);
    }
    for (const auto& m : mismatches) text += "recorded value mismatch: " + m + "\n";
    text += r.describe();
    if (report != nullptr) *report = dup_string(text);
    if (!r.feasible() || !mismatches.empty()) {
      last_error = "schedule is not a feasible partition";
      return CDS_INFEASIBLE;
    }
    return CDS_OK;
  });
}

cds_status cds_classify(const cds_instance* instance, const cds_schedule* schedule,
                        const char** structure) {
  if (instance == nullptr || schedule == nullptr || structure == nullptr) {
    return null_arg("instance/schedule/structure");
  }
  return guarded([&] {
    *structure =
        cds::to_string(cds::classify(instance->instance, schedule->solution.schedule));
    return CDS_OK;
  });
}

cds_status cds_bench(const char* spec_json, char** csv, char** diagnostics) {
  if (spec_json == nullptr || csv == nullptr) return null_arg("spec/csv");
  return guarded([&] {
    const cds::BenchResult result = cds::run_bench(cds::parse_bench_spec(spec_json));
    std::string diag;
    for (const auto& d : result.diagnostics) diag += d + "\n";
    *csv = dup_string(result.csv());
    if (diagnostics != nullptr) *diagnostics = dup_string(diag);
    return CDS_OK;
  });
}

}  // extern "C"
