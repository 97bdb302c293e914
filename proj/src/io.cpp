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

#include "cds/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <initializer_list>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace cds::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_fields(const json& obj, std::string_view what,
                    std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw ParseError(std::string(what) + " is missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto& k : required) known = known || key == k;
    for (const auto& k : optional) known = known || key == k;
    if (!known) {
      throw ParseError(std::string(what) + " has unknown field '" + key + "'");
    }
  }
}

template <typename T>
T get(const json& obj, std::string_view key, std::string_view what) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + "." + std::string(key) + ": " + e.what());
  }
}

Cost get_cost(const json& obj, std::string_view key, std::string_view what) {
  const auto& v = obj.at(key);
  if (!v.is_string()) {
    throw ParseError(std::string(what) + "." + std::string(key) +
                     " must be a decimal string");
  }
  try {
    return Cost::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + "." + std::string(key) + ": " + e.what());
  }
}

// Top-level fields one per line, rows of `array_key` one per line.
std::string dump_document(const ordered_json& doc, std::string_view array_key) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + ordered_json(key).dump() + ": ";
    if (key == array_key && !value.empty()) {
      out += "[\n";
      for (std::size_t k = 0; k < value.size(); ++k) {
        out += "    " + value[k].dump();
        out += k + 1 < value.size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

void check_version(const json& doc) {
  const int version = get<int>(doc, "schema_version", "document");
  if (version != kSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version));
  }
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  ordered_json doc = ordered_json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["bound"] = instance.bound().str();
  if (const auto& meta = instance.metadata()) {
    ordered_json m = {{"family", meta->family}, {"params", meta->params}};
    if (meta->seed) m["seed"] = *meta->seed;
    doc["metadata"] = std::move(m);
  }
  ordered_json items = ordered_json::array();
  for (const Item& it : instance.items()) {
    items.push_back({{"id", it.id}, {"due", it.due}});
  }
  doc["items"] = std::move(items);
  return dump_document(doc, "items");
}

Instance instance_from_json(std::string_view text) {
  const json doc = parse_document(text);
  require_fields(doc, "instance", {"schema_version", "bound", "items"}, {"metadata"});
  check_version(doc);
  const Cost bound = get_cost(doc, "bound", "instance");
  const json& items_json = doc.at("items");
  if (!items_json.is_array()) throw ParseError("instance.items must be an array");
  std::vector<Item> items;
  items.reserve(items_json.size());
  for (const json& it : items_json) {
    require_fields(it, "item", {"id", "due"});
    items.push_back({get<ItemId>(it, "id", "item"), get<Time>(it, "due", "item")});
  }
  std::optional<InstanceMetadata> meta;
  if (doc.contains("metadata")) {
    const json& m = doc.at("metadata");
    require_fields(m, "metadata", {"family", "params"}, {"seed"});
    meta.emplace();
    meta->family = get<std::string>(m, "family", "metadata");
    meta->params = get<std::map<std::string, std::string>>(m, "params", "metadata");
    if (m.contains("seed")) meta->seed = get<std::uint64_t>(m, "seed", "metadata");
  }
  return Instance(std::move(items), bound, std::move(meta));
}

std::string instance_hash(const Instance& instance) {
  std::string bytes = "cds-instance-v1\nbound " + instance.bound().str() + "\n";
  for (const Item& it : instance.items()) {
    bytes += std::to_string(it.id);
    bytes += ' ';
    bytes += std::to_string(it.due);
    bytes += '\n';
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    hex += kHex[digest[k] >> 4];
    hex += kHex[digest[k] & 0xF];
  }
  return hex;
}

SolutionFile make_solution(const Instance& instance, Schedule schedule,
                           std::string algorithm) {
  const ValidationReport report = validate(instance, schedule);
  SolutionFile out;
  out.instance_hash = instance_hash(instance);
  out.algorithm = std::move(algorithm);
  out.bin_costs = report.bin_costs;
  out.total_bins = schedule.bin_count();
  out.total_cost = report.total_cost;
  out.feasible = report.feasible();
  out.schedule = std::move(schedule);
  return out;
}

std::string solution_to_json(const SolutionFile& solution) {
  ordered_json doc = ordered_json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["instance_hash"] = solution.instance_hash;
  doc["algorithm"] = solution.algorithm;
  ordered_json bins = ordered_json::array();
  for (std::size_t j = 0; j < solution.schedule.bins.size(); ++j) {
    const BinDelivery& bin = solution.schedule.bins[j];
    const std::string cost =
        j < solution.bin_costs.size() ? solution.bin_costs[j].str() : "0";
    bins.push_back({{"time", bin.time}, {"item_ids", bin.item_ids}, {"cost", cost}});
  }
  doc["totals"] = {{"bins", solution.total_bins},
                   {"total_cost", solution.total_cost.str()}};
  doc["feasible"] = solution.feasible;
  doc["bins"] = std::move(bins);
  return dump_document(doc, "bins");
}

SolutionFile solution_from_json(std::string_view text, const Instance& instance) {
  const json doc = parse_document(text);
  require_fields(doc, "solution",
                 {"schema_version", "instance_hash", "algorithm", "bins", "totals",
                  "feasible"});
  check_version(doc);
  SolutionFile out;
  out.instance_hash = get<std::string>(doc, "instance_hash", "solution");
  const std::string expected = instance_hash(instance);
  if (out.instance_hash != expected) {
    throw HashMismatch("solution was written for instance " + out.instance_hash +
                       ", not " + expected);
  }
  out.algorithm = get<std::string>(doc, "algorithm", "solution");
  const json& bins = doc.at("bins");
  if (!bins.is_array()) throw ParseError("solution.bins must be an array");
  for (const json& b : bins) {
    require_fields(b, "bin", {"time", "item_ids", "cost"});
    out.schedule.bins.push_back(
        {get<std::vector<ItemId>>(b, "item_ids", "bin"), get<Time>(b, "time", "bin")});
    out.bin_costs.push_back(get_cost(b, "cost", "bin"));
  }
  const json& totals = doc.at("totals");
  require_fields(totals, "totals", {"bins", "total_cost"});
  out.total_bins = get<std::size_t>(totals, "bins", "totals");
  out.total_cost = get_cost(totals, "total_cost", "totals");
  out.feasible = get<bool>(doc, "feasible", "solution");
  return out;
}

std::vector<std::string> recorded_mismatches(const Instance& instance,
                                             const SolutionFile& solution) {
  std::vector<std::string> out;
  const ValidationReport report = validate(instance, solution.schedule);
  for (std::size_t j = 0; j < solution.bin_costs.size() && j < report.bin_costs.size(); ++j) {
    if (solution.bin_costs[j] != report.bin_costs[j]) {
      out.push_back("bin " + std::to_string(j) + " records cost " +
                    solution.bin_costs[j].str() + " but derives " +
                    report.bin_costs[j].str());
    }
  }
  if (solution.total_bins != solution.schedule.bin_count()) {
    out.push_back("totals.bins records " + std::to_string(solution.total_bins) +
                  " but the file lists " + std::to_string(solution.schedule.bin_count()));
  }
  if (solution.total_cost != report.total_cost) {
    out.push_back("totals.total_cost records " + solution.total_cost.str() +
                  " but derives " + report.total_cost.str());
  }
  if (solution.feasible != report.feasible()) {
    out.push_back(std::string("feasible flag records ") +
                  (solution.feasible ? "true" : "false") + " but derives " +
                  (report.feasible() ? "true" : "false"));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace cds::io
