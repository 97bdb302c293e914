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


// Slow, obviously-correct reference implementations used only by tests.
// They share no code with the library: plain 64-bit arithmetic on small
// inputs, exhaustive enumeration everywhere.

#ifndef CDS_TESTS_REFERENCE_HPP_
#define CDS_TESTS_REFERENCE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace ref {

using i64 = std::int64_t;

inline i64 cost_at(const std::vector<i64>& dues, i64 t) {
  i64 s = 0;
  for (i64 d : dues) s += d > t ? d - t : t - d;
  return s;
}

// Minimum of cost_at over every integer time between the extreme dues.
inline i64 min_cost_scan(const std::vector<i64>& dues) {
  const auto [lo, hi] = std::minmax_element(dues.begin(), dues.end());
  i64 best = std::numeric_limits<i64>::max();
  for (i64 t = *lo; t <= *hi; ++t) best = std::min(best, cost_at(dues, t));
  return best;
}

// Bounded k-times problem in its nearest-time form: choose a set V of at
// most k times minimising sum_i min_{v in V} |d_i - v| with every item within
// B of its nearest time. Some optimum uses only times in {d_i, d_i - B,
// d_i + B}, so every subset of that candidate set is tried. Exponential in
// 3n; keep n <= 6.
inline std::optional<i64> et_by_time_sets(const std::vector<i64>& dues, i64 bound,
                                          std::size_t k) {
  std::set<i64> cand_set;
  for (i64 d : dues) {
    cand_set.insert(d);
    cand_set.insert(d - bound);
    cand_set.insert(d + bound);
  }
  const std::vector<i64> cand(cand_set.begin(), cand_set.end());
  std::optional<i64> best;
  const std::size_t c = cand.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    i64 total = 0;
    bool ok = true;
    for (i64 d : dues) {
      i64 near = std::numeric_limits<i64>::max();
      for (std::size_t b = 0; b < c; ++b) {
        if (mask >> b & 1) near = std::min(near, cand[b] > d ? cand[b] - d : d - cand[b]);
      }
      if (near > bound) {
        ok = false;
        break;
      }
      total += near;
    }
    if (ok && (!best || total < *best)) best = total;
  }
  return best;
}

// Minimum number of blocks over every set partition of the items such that
// each block can be delivered at some time within the bound. Restricted
// growth strings; keep n <= 9.
inline std::size_t min_bins_by_partitions(const std::vector<i64>& dues, i64 bound) {
  const std::size_t n = dues.size();
  std::vector<std::size_t> label(n, 0);
  std::size_t best = n;
  // Recursive enumeration of restricted growth strings.
  auto rec = [&](auto& self, std::size_t pos, std::size_t blocks) -> void {
    if (blocks >= best) return;
    if (pos == n) {
      std::vector<std::vector<i64>> parts(blocks);
      for (std::size_t i = 0; i < n; ++i) parts[label[i]].push_back(dues[i]);
      for (const auto& p : parts) {
        if (min_cost_scan(p) > bound) return;
      }
      best = blocks;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

// First fit in the given order.
inline std::vector<i64> first_fit_loads(const std::vector<i64>& sizes, i64 cap) {
  std::vector<i64> loads;
  for (i64 s : sizes) {
    auto it = std::find_if(loads.begin(), loads.end(),
                           [&](i64 l) { return l + s <= cap; });
    if (it == loads.end()) {
      loads.push_back(s);
    } else {
      *it += s;
    }
  }
  return loads;
}

inline std::vector<i64> random_dues(std::mt19937_64& rng, std::size_t n, i64 max_due) {
  std::uniform_int_distribution<i64> due(0, max_due);
  std::vector<i64> out(n);
  for (auto& d : out) d = due(rng);
  return out;
}

}  // namespace ref

#endif  // CDS_TESTS_REFERENCE_HPP_
