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

#include "cds/cost.hpp"

#include <limits>
#include <stdexcept>

namespace cds {

Cost::Cost(const Rep& v) : value_(v) {
  if (value_ < 0) throw std::invalid_argument("cost must be non-negative");
}

Cost Cost::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty cost string");
  Rep v = 0;
  for (const char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("cost must be a decimal digit string: '" +
                                  std::string(text) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return Cost(v);
}

Cost Cost::distance(Time a, Time b) {
  // Both operands are non-negative in every caller, so a - b cannot overflow;
  // go through Rep anyway so negative inputs are still exact.
  Rep d = Rep(a) - Rep(b);
  if (d < 0) d = -d;
  return Cost(d);
}

std::int64_t Cost::to_int64() const {
  if (value_ > Rep(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("cost " + str() + " does not fit in 64 bits");
  }
  return value_.convert_to<std::int64_t>();
}

Cost& Cost::operator-=(const Cost& other) {
  if (other.value_ > value_) {
    throw std::domain_error("cost subtraction would go negative");
  }
  value_ -= other.value_;
  return *this;
}

}  // namespace cds
