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

#include "cds/generators.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace cds {

using Rep = Cost::Rep;

namespace {

Rep gcd(Rep a, Rep b) {
  while (b != 0) {
    Rep r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Time to_time(const Rep& v) {
  if (v < 0 || v > Rep(std::numeric_limits<Time>::max())) {
    throw std::overflow_error("generated time " + v.str() +
                              " does not fit a 64-bit time");
  }
  return v.convert_to<Time>();
}

void check_item_budget(const Rep& n) {
  if (n > Rep(kMaxGeneratedItems)) {
    throw CapacityError("family would generate " + n.str() +
                        " items; the limit is " +
                        std::to_string(kMaxGeneratedItems));
  }
}

GeneratedInstance finish(Instance instance, std::optional<Schedule> certificate) {
  std::optional<ValidationReport> report;
  if (certificate) report = validate(instance, *certificate);
  return {std::move(instance), std::move(certificate), std::move(report)};
}

}  // namespace

std::vector<std::uint64_t> theorem3_group_sizes(int ell) {
  if (ell < 2 || ell > 6) {
    throw StructuralError("theorem3 family needs 2 <= ell <= 6, got " +
                          std::to_string(ell));
  }
  std::vector<std::uint64_t> sizes{1, 2};
  Rep sum = 3;
  for (int t = 3; t <= ell; ++t) {
    Rep next = sum;
    for (int p = 0; p < t - 1; ++p) next *= 4;
    sizes.push_back(next.convert_to<std::uint64_t>());
    sum += next;
  }
  return sizes;
}

namespace {

Rep theorem3_lcm(const std::vector<std::uint64_t>& sizes) {
  Rep l = 1;
  for (std::size_t t = 1; t < sizes.size(); ++t) {
    const Rep s(sizes[t]);
    l = l / gcd(l, s) * s;
  }
  return l;
}

Rep theorem3_min_bound(const std::vector<std::uint64_t>& sizes) {
  Rep n = 0;
  for (const auto s : sizes) n += s;
  return n * n * Rep(sizes.size());
}

}  // namespace

Cost theorem3_default_bound(int ell) {
  const auto sizes = theorem3_group_sizes(ell);
  const Rep floor = theorem3_min_bound(sizes);
  const Rep step = theorem3_lcm(sizes);
  return Cost((floor + step - 1) / step * step);
}

GeneratedInstance gen_theorem3(int ell, std::optional<Cost> bound) {
  const auto sizes = theorem3_group_sizes(ell);
  Rep n = 0;
  for (const auto s : sizes) n += s;
  check_item_budget(n);

  const Cost b = bound ? *bound : theorem3_default_bound(ell);
  if (b.value() < theorem3_min_bound(sizes)) {
    throw StructuralError("theorem3 bound must be at least n^2 * ell = " +
                          theorem3_min_bound(sizes).str());
  }
  if (b.value() % theorem3_lcm(sizes) != 0) {
    throw StructuralError("theorem3 bound must be divisible by " +
                          theorem3_lcm(sizes).str());
  }

  std::vector<Item> items;
  items.reserve(n.convert_to<std::size_t>());
  Rep time = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    if (t > 0) time += b.value() / Rep(sizes[t]) + 1;
    const Time due = to_time(time);
    for (std::uint64_t c = 0; c < sizes[t]; ++c) {
      items.push_back({static_cast<ItemId>(items.size()), due});
    }
  }

  Schedule cert;
  cert.bins.push_back({{}, to_time(time)});
  cert.bins[0].item_ids.reserve(items.size());
  for (const Item& it : items) cert.bins[0].item_ids.push_back(it.id);

  InstanceMetadata meta{"theorem3",
                        {{"ell", std::to_string(ell)}, {"bound", b.str()}},
                        std::nullopt};
  return finish(Instance(std::move(items), b, std::move(meta)), std::move(cert));
}

GeneratedInstance gen_median_lb(std::int64_t lambda) {
  if (lambda < 2) {
    throw StructuralError("median-lb family needs lambda >= 2");
  }
  std::int64_t k = 0;
  while ((k + 1) * (k + 1) <= lambda - 1) ++k;
  if (k * k != lambda - 1) {
    throw StructuralError("median-lb family needs sqrt(lambda - 1) integral, got lambda = " +
                          std::to_string(lambda));
  }
  const Rep bound = Rep(lambda) * Rep(lambda);
  const Rep run = 2 * Rep(lambda);
  const Rep block = 2 * bound + 1;
  check_item_budget(Rep(k) * (run + block));
  const std::int64_t run_len = run.convert_to<std::int64_t>();
  const std::int64_t block_len = block.convert_to<std::int64_t>();

  std::vector<Item> items;
  // A run j (1-based) holds due times (j-1)*run_len + i - 1, i = 1..run_len.
  for (std::int64_t j = 1; j <= k; ++j) {
    for (std::int64_t i = 1; i <= run_len; ++i) {
      items.push_back({static_cast<ItemId>(items.size()), (j - 1) * run_len + i - 1});
    }
  }
  const std::size_t first_block_item = items.size();
  for (std::int64_t j = 1; j <= k; ++j) {
    for (std::int64_t c = 0; c < block_len; ++c) {
      items.push_back({static_cast<ItemId>(items.size()), run_len * k + j});
    }
  }

  // Bin i takes the i-th item of every run and all of block i, delivered at
  // block i's due time.
  Schedule cert;
  for (std::int64_t i = 1; i <= k; ++i) {
    BinDelivery bin{{}, run_len * k + i};
    for (std::int64_t j = 1; j <= k; ++j) {
      bin.item_ids.push_back(static_cast<ItemId>((j - 1) * run_len + i - 1));
    }
    const std::size_t block_first =
        first_block_item + static_cast<std::size_t>((i - 1) * block_len);
    for (std::int64_t c = 0; c < block_len; ++c) {
      bin.item_ids.push_back(static_cast<ItemId>(block_first + static_cast<std::size_t>(c)));
    }
    cert.bins.push_back(std::move(bin));
  }

  InstanceMetadata meta{"median_lower_bound",
                        {{"lambda", std::to_string(lambda)},
                         {"k", std::to_string(k)},
                         {"ell", std::to_string(run_len)}},
                        std::nullopt};
  return finish(Instance(std::move(items), Cost(bound), std::move(meta)),
                std::move(cert));
}

GeneratedInstance gen_3partition(
    std::span<const std::int64_t> a, std::int64_t beta,
    std::optional<std::vector<std::array<std::size_t, 3>>> partition) {
  if (a.empty() || a.size() % 3 != 0) {
    throw StructuralError("3-partition needs 3m integers with m >= 1");
  }
  if (beta <= 0) throw StructuralError("3-partition needs beta > 0");
  const std::size_t m = a.size() / 3;
  Rep sum = 0;
  std::int64_t alpha = 0;
  for (const std::int64_t v : a) {
    if (v <= 0 || 4 * v < beta || 2 * v > beta) {
      throw StructuralError("3-partition value " + std::to_string(v) +
                            " outside [beta/4, beta/2]");
    }
    sum += v;
    alpha = std::max(alpha, v);
  }
  if (sum != Rep(m) * beta) {
    throw StructuralError("3-partition values must sum to m * beta = " +
                          (Rep(m) * beta).str());
  }
  const Rep b(beta);
  const Rep block = Rep(m) * Rep(m) * b * b * b * b;
  check_item_budget(Rep(a.size()) + Rep(m) * block);

  // Scaling every time by 3*m*beta turns d + beta/3 + j/(m*beta) into an
  // integer; costs are linear in time, so the bound scales the same way.
  const Rep scale = 3 * Rep(m) * b;
  const Rep d = Rep(alpha) * b;
  std::vector<Item> items;
  items.reserve((Rep(a.size()) + Rep(m) * block).convert_to<std::size_t>());
  for (const std::int64_t v : a) {
    items.push_back({static_cast<ItemId>(items.size()), to_time(scale * (d - Rep(v) * b))});
  }
  std::vector<Time> block_time(m);
  const std::uint64_t block_len = block.convert_to<std::uint64_t>();
  for (std::size_t j = 1; j <= m; ++j) {
    block_time[j - 1] = to_time(scale * d + Rep(m) * b * b + 3 * Rep(j));
    for (std::uint64_t c = 0; c < block_len; ++c) {
      items.push_back({static_cast<ItemId>(items.size()), block_time[j - 1]});
    }
  }
  const Cost bound(scale * (b * b + b + 3));

  std::optional<Schedule> cert;
  if (partition) {
    if (partition->size() != m) {
      throw StructuralError("3-partition certificate needs exactly m triples");
    }
    std::vector<bool> used(a.size(), false);
    cert.emplace();
    for (std::size_t j = 0; j < m; ++j) {
      BinDelivery bin{{}, block_time[j]};
      Rep triple = 0;
      for (const std::size_t idx : (*partition)[j]) {
        if (idx >= a.size() || used[idx]) {
          throw StructuralError("3-partition certificate index " +
                                std::to_string(idx) + " invalid or reused");
        }
        used[idx] = true;
        triple += a[idx];
        bin.item_ids.push_back(static_cast<ItemId>(idx));
      }
      if (triple != b) {
        throw StructuralError("3-partition triple " + std::to_string(j) +
                              " sums to " + triple.str() + ", not beta");
      }
      const std::uint64_t first = a.size() + j * block_len;
      for (std::uint64_t c = 0; c < block_len; ++c) {
        bin.item_ids.push_back(static_cast<ItemId>(first + c));
      }
      cert->bins.push_back(std::move(bin));
    }
  }

  std::string values;
  for (const std::int64_t v : a) {
    if (!values.empty()) values += ',';
    values += std::to_string(v);
  }
  InstanceMetadata meta{"three_partition",
                        {{"a", values},
                         {"beta", std::to_string(beta)},
                         {"time_scale", scale.str()}},
                        std::nullopt};
  return finish(Instance(std::move(items), bound, std::move(meta)), std::move(cert));
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t range) {
  if (range == 0) throw StructuralError("empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x = engine();
  while (x > limit) x = engine();
  return x % range;
}

Instance gen_random(std::size_t n, Time max_due, Cost bound,
                    std::uint64_t seed) {
  if (n == 0) throw StructuralError("random instance needs n >= 1");
  if (max_due < 1) throw StructuralError("random instance needs max_due >= 1");
  check_item_budget(Rep(n));
  std::mt19937_64 engine(seed);
  std::vector<Item> items;
  items.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto due = static_cast<Time>(
        uniform_below(engine, static_cast<std::uint64_t>(max_due) + 1));
    items.push_back({static_cast<ItemId>(k), due});
  }
  InstanceMetadata meta{"random",
                        {{"n", std::to_string(n)},
                         {"max_due", std::to_string(max_due)},
                         {"bound", bound.str()}},
                        seed};
  return Instance(std::move(items), std::move(bound), std::move(meta));
}

}  // namespace cds
