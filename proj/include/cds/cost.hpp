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

#ifndef CDS_COST_HPP_
#define CDS_COST_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cds {

/// Delivery and due times. Always non-negative in a valid instance.
using Time = std::int64_t;

/// Exact non-negative inventory cost.
///
/// Backed by a 128-bit magnitude integer whose arithmetic throws
/// std::overflow_error instead of wrapping. Adversarial instances push costs
/// well past 64 bits, so nothing in the library narrows a Cost implicitly.
/// Swapping Rep for boost::multiprecision::cpp_int lifts the width limit
/// entirely; nothing else depends on the fixed width.
class Cost {
 public:
  using Rep = boost::multiprecision::checked_int128_t;

  Cost() = default;
  Cost(std::uint64_t v) : value_(v) {}  // NOLINT: implicit from literals
  explicit Cost(const Rep& v);

  /// Parses a base-10 string of digits. Throws std::invalid_argument.
  static Cost parse(std::string_view text);

  /// Distance |a - b| between two times.
  static Cost distance(Time a, Time b);

  const Rep& value() const { return value_; }
  std::string str() const { return value_.str(); }

  /// Narrowing conversion; throws std::overflow_error if it does not fit.
  std::int64_t to_int64() const;
  double to_double() const { return value_.convert_to<double>(); }

  Cost& operator+=(const Cost& other) {
    value_ += other.value_;
    return *this;
  }
  /// Saturating difference would hide bugs; this throws if other > *this.
  Cost& operator-=(const Cost& other);
  Cost& operator*=(const Cost& other) {
    value_ *= other.value_;
    return *this;
  }

  friend Cost operator+(Cost a, const Cost& b) { return a += b; }
  friend Cost operator-(Cost a, const Cost& b) { return a -= b; }
  friend Cost operator*(Cost a, const Cost& b) { return a *= b; }

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rep value_ = 0;
};

}  // namespace cds

#endif  // CDS_COST_HPP_
