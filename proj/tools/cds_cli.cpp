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


// Command-line front end. Talks to the library only through cds.h.
//
//   cds generate theorem3 --ell 3 --out inst.json [--cert cert.json]
//   cds solve inst.json --algorithm median --out sol.json
//   cds validate inst.json sol.json
//   cds bench --spec corpus.json --csv table.csv
//
// Exit codes: 0 ok/feasible, 1 infeasible, 2 usage or input error,
// 3 capacity guard, 4 solution/instance hash mismatch.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cds/cds.h"

namespace {

constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitHashMismatch = 4;

struct InstanceDeleter {
  void operator()(cds_instance* p) const { cds_instance_free(p); }
};
struct ScheduleDeleter {
  void operator()(cds_schedule* p) const { cds_schedule_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { cds_string_free(p); }
};
using InstancePtr = std::unique_ptr<cds_instance, InstanceDeleter>;
using SchedulePtr = std::unique_ptr<cds_schedule, ScheduleDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(cds_status status) {
  switch (status) {
    case CDS_OK:
      return 0;
    case CDS_INFEASIBLE:
      return kExitInfeasible;
    case CDS_CAPACITY:
      return kExitCapacity;
    case CDS_HASH_MISMATCH:
      return kExitHashMismatch;
    case CDS_INTERNAL:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

int report_error(const std::string& context, cds_status status) {
  std::cerr << "cds: " << context << ": " << cds_last_error() << " ("
            << cds_status_name(status) << ")\n";
  return exit_code(status);
}

struct GenerateOptions {
  std::string family;
  int ell = 0;
  std::string bound;
  std::int64_t lambda = 0;
  std::vector<std::int64_t> a;
  std::int64_t beta = 0;
  std::vector<std::string> groups;
  std::size_t n = 0;
  std::int64_t max_due = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string cert;
};

// "0,1,2" -> {0,1,2}
std::vector<std::size_t> parse_triple(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoul(part));
  if (out.size() != 3) throw std::invalid_argument("group '" + text + "' is not a triple");
  return out;
}

int run_generate(const GenerateOptions& opt) {
  cds_instance* raw = nullptr;
  cds_schedule* cert_raw = nullptr;
  cds_status status = CDS_OK;
  if (opt.family == "theorem3") {
    status = cds_generate_theorem3(opt.ell, opt.bound.empty() ? nullptr : opt.bound.c_str(),
                                   &raw, &cert_raw);
  } else if (opt.family == "median-lb") {
    status = cds_generate_median_lb(opt.lambda, &raw, &cert_raw);
  } else if (opt.family == "three-partition") {
    std::vector<std::size_t> triples;
    try {
      for (const auto& g : opt.groups) {
        for (const std::size_t idx : parse_triple(g)) triples.push_back(idx);
      }
    } catch (const std::exception& e) {
      std::cerr << "cds: generate: " << e.what() << "\n";
      return kExitUsage;
    }
    status = cds_generate_three_partition(opt.a.data(), opt.a.size(), opt.beta,
                                          opt.groups.empty() ? nullptr : triples.data(),
                                          &raw, &cert_raw);
  } else {
    status = cds_generate_random(opt.n, opt.max_due, opt.bound.c_str(), opt.seed, &raw);
  }
  InstancePtr instance(raw);
  SchedulePtr cert(cert_raw);
  if (status != CDS_OK) return report_error("generate " + opt.family, status);

  if ((status = cds_instance_save(instance.get(), opt.out.c_str())) != CDS_OK) {
    return report_error("generate", status);
  }
  std::cout << "wrote " << opt.out << " (" << cds_instance_size(instance.get())
            << " items)\n";
  if (cert) {
    char* report_raw = nullptr;
    const cds_status verdict = cds_validate(instance.get(), cert.get(), &report_raw);
    StringPtr report(report_raw);
    if (verdict == CDS_INFEASIBLE) {
      std::cerr << "cds: warning: the " << opt.family
                << " certificate does not validate:\n"
                << report.get();
    }
    if (!opt.cert.empty()) {
      if ((status = cds_schedule_save(cert.get(), opt.cert.c_str())) != CDS_OK) {
        return report_error("generate", status);
      }
      std::cout << "wrote " << opt.cert << " (certificate, "
                << cds_schedule_bin_count(cert.get()) << " bins)\n";
    }
  } else if (!opt.cert.empty()) {
    std::cerr << "cds: warning: family " << opt.family << " has no certificate\n";
  }
  return 0;
}

int run_solve(const std::string& instance_path, const std::string& algorithm,
              const std::string& out) {
  cds_instance* raw = nullptr;
  cds_status status = cds_instance_load(instance_path.c_str(), &raw);
  InstancePtr instance(raw);
  if (status != CDS_OK) return report_error(instance_path, status);

  cds_schedule* sched_raw = nullptr;
  status = cds_solve(instance.get(), algorithm.c_str(), &sched_raw);
  SchedulePtr schedule(sched_raw);
  if (status != CDS_OK) return report_error("solve", status);

  char* report_raw = nullptr;
  status = cds_validate(instance.get(), schedule.get(), &report_raw);
  StringPtr report(report_raw);
  if (status != CDS_OK) {
    // Never expected: every algorithm returns feasible schedules.
    std::cerr << "cds: solve: " << algorithm << " produced an invalid schedule\n"
              << (report ? report.get() : "");
    char* dump = nullptr;
    if (cds_schedule_to_json(schedule.get(), &dump) == CDS_OK) {
      std::cerr << dump;
      cds_string_free(dump);
    }
    return exit_code(status);
  }
  if (!out.empty()) {
    if ((status = cds_schedule_save(schedule.get(), out.c_str())) != CDS_OK) {
      return report_error("solve", status);
    }
  }
  char* cost_raw = nullptr;
  cds_schedule_total_cost(schedule.get(), &cost_raw);
  StringPtr cost(cost_raw);
  std::cout << algorithm << ": " << cds_schedule_bin_count(schedule.get())
            << " bins, total cost " << cost.get() << "\n";
  return 0;
}

int run_validate(const std::string& instance_path, const std::string& solution_path) {
  cds_instance* raw = nullptr;
  cds_status status = cds_instance_load(instance_path.c_str(), &raw);
  InstancePtr instance(raw);
  if (status != CDS_OK) return report_error(instance_path, status);

  cds_schedule* sched_raw = nullptr;
  status = cds_schedule_load(instance.get(), solution_path.c_str(), &sched_raw);
  SchedulePtr schedule(sched_raw);
  if (status != CDS_OK) return report_error(solution_path, status);

  char* report_raw = nullptr;
  status = cds_validate(instance.get(), schedule.get(), &report_raw);
  StringPtr report(report_raw);
  if (status != CDS_OK && status != CDS_INFEASIBLE) {
    return report_error("validate", status);
  }
  std::cout << report.get();
  return exit_code(status);
}

struct BenchOptions {
  std::string spec_path;
  std::string csv_path;
  std::string diagnostics_path;
};

int run_bench(const BenchOptions& opt) {
  std::string spec = "{}";
  if (!opt.spec_path.empty()) {
    std::ifstream in(opt.spec_path);
    if (!in) {
      std::cerr << "cds: bench: cannot open " << opt.spec_path << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    spec = buf.str();
  }
  char* csv_raw = nullptr;
  char* diag_raw = nullptr;
  const cds_status status = cds_bench(spec.c_str(), &csv_raw, &diag_raw);
  StringPtr csv(csv_raw);
  StringPtr diag(diag_raw);
  if (status != CDS_OK) return report_error("bench", status);
  if (diag && *diag.get() != '\0') std::cerr << diag.get();
  if (opt.csv_path.empty() || opt.csv_path == "-") {
    std::cout << csv.get();
  } else {
    std::ofstream out(opt.csv_path, std::ios::binary | std::ios::trunc);
    out << csv.get();
    if (!out) {
      std::cerr << "cds: bench: cannot write " << opt.csv_path << "\n";
      return kExitUsage;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Container delivery scheduling: generate, solve, validate, bench"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->require_subcommand(1);
  generate->fallthrough();
  generate->add_option("--out", gen.out, "Instance file to write")->required();
  generate->add_option("--cert", gen.cert, "Certificate solution file to write");

  auto* theorem3 = generate->add_subcommand("theorem3", "Early-policy lower bound family");
  theorem3->add_option("--ell", gen.ell, "Number of groups (2..6)")->required();
  theorem3->add_option("--bound", gen.bound, "Bound B (decimal); default is the smallest valid");

  auto* median = generate->add_subcommand("median-lb", "Median-policy lower bound family");
  median->add_option("--lambda", gen.lambda, "lambda with sqrt(lambda - 1) integral")
      ->required();

  auto* three = generate->add_subcommand("three-partition", "Hardness reduction instance");
  three->add_option("--a", gen.a, "The 3m values")->required()->delimiter(',');
  three->add_option("--beta", gen.beta, "Target triple sum")->required();
  three->add_option("--group", gen.groups,
                    "Known triple of value indices, e.g. 0,1,2 (repeat m times)");

  auto* random = generate->add_subcommand("random", "Uniform random due times");
  random->add_option("--n", gen.n, "Item count")->required();
  random->add_option("--max-due", gen.max_due, "Largest due time")->required();
  random->add_option("--bound", gen.bound, "Bound B (decimal)")->required();
  random->add_option("--seed", gen.seed, "RNG seed")->required();

  std::string instance_path;
  std::string solution_path;
  std::string algorithm;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--algorithm", algorithm,
                    "early, early-late, median, decoupling, refined or exact")
      ->required();
  solve->add_option("--out", solve_out, "Solution file to write");

  auto* validate = app.add_subcommand("validate", "Check a solution against its instance");
  validate->add_option("instance", instance_path, "Instance file")->required();
  validate->add_option("solution", solution_path, "Solution file")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Tabulate bins against the optimum");
  bench_cmd->add_option("--spec", bench.spec_path, "Corpus spec (JSON); empty corpus if absent");
  bench_cmd->add_option("--csv", bench.csv_path, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*generate) {
    gen.family = generate->get_subcommands().front()->get_name();
    return run_generate(gen);
  }
  if (*solve) return run_solve(instance_path, algorithm, solve_out);
  if (*validate) return run_validate(instance_path, solution_path);
  return run_bench(bench);
}
