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


#ifndef CDS_TESTS_HELPERS_HPP_
#define CDS_TESTS_HELPERS_HPP_

#include <cstdint>
#include <vector>

#include "cds/core.hpp"

namespace testing {

// Items get ids 0..n-1 in the order given.
inline cds::Instance make_instance(const std::vector<std::int64_t>& dues,
                                   std::uint64_t bound) {
  std::vector<cds::Item> items;
  for (std::size_t k = 0; k < dues.size(); ++k) {
    items.push_back({static_cast<cds::ItemId>(k), dues[k]});
  }
  return cds::Instance(std::move(items), cds::Cost(bound));
}

inline std::vector<std::int64_t> bin_dues(const cds::Instance& inst,
                                          const cds::BinDelivery& bin) {
  std::vector<std::int64_t> out;
  for (const auto id : bin.item_ids) out.push_back(inst.due(inst.index_of(id)));
  return out;
}

inline cds::Cost C(std::uint64_t v) { return cds::Cost(v); }

}  // namespace testing

#endif  // CDS_TESTS_HELPERS_HPP_
