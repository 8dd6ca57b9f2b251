// Copyright 2026 The tropsig Authors.
//
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

#pragma once

#include <cstddef>
#include <cstdint>

namespace tropsig {

enum class Scheme { one = 1, two = 2 };

/// Degree of the message polynomial in the second scheme.
///
/// `d` is the default and the only choice under which the documented
/// degree gates (S2, S3 of degree 2d; S4, E of degree 3d) are consistent.
/// `two_d` squares the degree-d encoding and shifts the S4/E gates to 4d.
enum class HashDegree { d, two_d };

struct Params {
  static constexpr std::size_t kDefaultDegree = 150;
  static constexpr std::int64_t kDefaultRange = 127;
  static constexpr std::size_t kMinDegree = 4;
  /// Keeps every scheme value (at most 4r plus small sums) far from overflow.
  static constexpr std::int64_t kMaxRange = (std::int64_t{1} << 30) - 1;

  std::size_t d = kDefaultDegree;
  std::int64_t r = kDefaultRange;
  Scheme scheme = Scheme::one;
  HashDegree hash_degree = HashDegree::d;

  /// Throws UsageError or UnsupportedParameterError.
  void validate() const;

  /// Inclusive bounds on deg(X): [ceil(3d/4), floor(5d/4)].
  std::size_t min_x_degree() const noexcept { return (3 * d + 3) / 4; }
  std::size_t max_x_degree() const noexcept { return (5 * d) / 4; }

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace tropsig
