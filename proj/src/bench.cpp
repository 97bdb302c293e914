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


#include "cds/bench.hpp"

#include <chrono>
#include <charconv>
#include <map>
#include <random>
#include <stdexcept>

#include "cds/generators.hpp"
#include "cds/oracle.hpp"
#include "json.hpp"

namespace cds {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::string_view what,
                    std::initializer_list<std::string_view> known) {
  if (!obj.is_object()) {
    throw std::invalid_argument(std::string(what) + " must be an object");
  }
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const auto& k : known) ok = ok || key == k;
    if (!ok) {
      throw std::invalid_argument(std::string(what) + " has unknown field '" +
                                  key + "'");
    }
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Entry {
  std::string name;
  Instance instance;
  std::optional<std::size_t> known_optimum;
};

std::vector<Entry> build_corpus(const BenchSpec& spec,
                                std::vector<std::string>& diagnostics) {
  std::vector<Entry> corpus;
  for (std::size_t s = 0; s < spec.random.size(); ++s) {
    const RandomSet& set = spec.random[s];
    std::mt19937_64 engine(set.seed);
    for (std::size_t j = 0; j < set.count; ++j) {
      const std::size_t n =
          set.n_min + uniform_below(engine, set.n_max - set.n_min + 1);
      const std::uint64_t bound =
          set.bound_min + uniform_below(engine, set.bound_max - set.bound_min + 1);
      const std::uint64_t seed = engine();
      Instance instance = gen_random(n, set.max_due, Cost(bound), seed);
      corpus.push_back({"random-" + std::to_string(s) + "-" + std::to_string(j),
                        std::move(instance), std::nullopt});
    }
  }
  for (const int ell : spec.theorem3) {
    const std::string name = "theorem3-ell" + std::to_string(ell);
    try {
      GeneratedInstance g = gen_theorem3(ell);
      std::optional<std::size_t> opt;
      // A feasible one-bin certificate is optimal by definition.
      if (g.certificate_report && g.certificate_report->feasible() &&
          g.certificate->bin_count() == 1) {
        opt = 1;
      }
      corpus.push_back({name, std::move(g.instance), opt});
    } catch (const std::exception& e) {
      diagnostics.push_back(name + ": " + e.what());
    }
  }
  for (const std::int64_t lambda : spec.median_lb) {
    const std::string name = "median_lb-lambda" + std::to_string(lambda);
    try {
      GeneratedInstance g = gen_median_lb(lambda);
      corpus.push_back({name, std::move(g.instance), std::nullopt});
    } catch (const std::exception& e) {
      diagnostics.push_back(name + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace

BenchSpec parse_bench_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bench spec: ") + e.what());
  }
  reject_unknown(doc, "bench spec",
                 {"random", "theorem3", "median_lb", "algorithms", "oracle", "timing"});
  BenchSpec spec;
  try {
    for (const json& r : doc.value("random", json::array())) {
      reject_unknown(r, "random set",
                     {"count", "n_min", "n_max", "max_due", "bound_min", "bound_max",
                      "seed"});
      RandomSet set;
      set.count = r.at("count").get<std::size_t>();
      set.n_min = r.at("n_min").get<std::size_t>();
      set.n_max = r.at("n_max").get<std::size_t>();
      set.max_due = r.at("max_due").get<Time>();
      set.bound_min = r.at("bound_min").get<std::uint64_t>();
      set.bound_max = r.at("bound_max").get<std::uint64_t>();
      set.seed = r.value("seed", std::uint64_t{0});
      if (set.n_min == 0 || set.n_min > set.n_max || set.bound_min > set.bound_max ||
          set.max_due < 0) {
        throw std::invalid_argument("random set has an empty range");
      }
      spec.random.push_back(set);
    }
    spec.theorem3 = doc.value("theorem3", std::vector<int>{});
    spec.median_lb = doc.value("median_lb", std::vector<std::int64_t>{});
    for (const auto& name : doc.value("algorithms", std::vector<std::string>{})) {
      const auto alg = parse_algorithm(name);
      if (!alg) throw std::invalid_argument("unknown algorithm '" + name + "'");
      spec.algorithms.push_back(*alg);
    }
    spec.oracle = doc.value("oracle", true);
    spec.timing = doc.value("timing", false);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bench spec: ") + e.what());
  }
  return spec;
}

std::optional<double> BenchRow::ratio() const {
  if (!optimum || *optimum == 0) return std::nullopt;
  return static_cast<double>(bins) / static_cast<double>(*optimum);
}

std::string BenchResult::csv() const {
  std::string out = "instance,algorithm,bins,total_cost,optimum,ratio,wall_ms\n";
  std::vector<std::string> order;
  std::map<std::string, std::optional<double>> worst;
  for (const BenchRow& row : rows) {
    out += row.instance + ',' + row.algorithm + ',' + std::to_string(row.bins) +
           ',' + row.total_cost.str() + ',';
    if (row.optimum) out += std::to_string(*row.optimum);
    out += ',';
    const auto ratio = row.ratio();
    if (ratio) out += format_double(*ratio);
    out += ',';
    if (row.wall_ms) out += format_double(*row.wall_ms);
    out += '\n';
    auto [it, inserted] = worst.try_emplace(row.algorithm);
    if (inserted) order.push_back(row.algorithm);
    if (ratio && (!it->second || *ratio > *it->second)) it->second = ratio;
  }
  for (const std::string& alg : order) {
    out += "max," + alg + ",,,,";
    if (worst[alg]) out += format_double(*worst[alg]);
    out += ",\n";
  }
  return out;
}

BenchResult run_bench(const BenchSpec& spec) {
  BenchResult result;
  std::vector<Algorithm> algorithms = spec.algorithms;
  if (algorithms.empty()) {
    for (const Algorithm a : all_algorithms()) {
      if (a != Algorithm::kExact) algorithms.push_back(a);
    }
  }
  for (Entry& entry : build_corpus(spec, result.diagnostics)) {
    std::optional<std::size_t> optimum = entry.known_optimum;
    if (!optimum && spec.oracle) {
      if (entry.instance.size() <= kExactMaxItems) {
        optimum = exact_min_bins(entry.instance).min_bins;
      } else {
        result.diagnostics.push_back(entry.name + ": " +
                                     std::to_string(entry.instance.size()) +
                                     " items exceed the exact oracle guard");
      }
    }
    for (const Algorithm alg : algorithms) {
      try {
        const auto start = std::chrono::steady_clock::now();
        const Schedule schedule = solve(entry.instance, alg);
        const auto stop = std::chrono::steady_clock::now();
        const ValidationReport report = validate(entry.instance, schedule);
        if (!report.feasible()) {
          result.diagnostics.push_back(entry.name + " " + to_string(alg) +
                                       ": infeasible output\n" + report.describe());
        }
        BenchRow row{entry.name, to_string(alg), schedule.bin_count(),
                     report.total_cost, optimum, std::nullopt};
        if (spec.timing) {
          row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        }
        result.rows.push_back(std::move(row));
      } catch (const std::exception& e) {
        result.diagnostics.push_back(entry.name + " " + to_string(alg) + ": " +
                                     e.what());
      }
    }
  }
  return result;
}

}  // namespace cds
