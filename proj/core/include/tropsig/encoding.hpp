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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tropsig/params.hpp"
#include "tropsig/poly.hpp"

namespace tropsig {

/// A 512-bit SHA3-512 digest, bytes in output order.
struct HashDigest {
  static constexpr std::size_t kBytes = 64;
  std::array<std::uint8_t, kBytes> bytes{};

  /// Bit i of the digest, most significant bit of each byte first.
  bool bit(std::size_t i) const noexcept { return ((bytes[i / 8] >> (7 - i % 8)) & 1U) != 0; }

  std::string hex() const;

  friend bool operator==(const HashDigest&, const HashDigest&) = default;
};

/// SHA3-512 of the raw message bytes.
HashDigest hash_message(std::span<const std::uint8_t> message);
HashDigest hash_message(std::string_view message);

/// Returns b when r = 2^b - 1 with 1 <= b <= 62; throws
/// UnsupportedParameterError otherwise.
unsigned bits_per_coefficient(std::int64_t r);

/// Number of 512-bit digest copies concatenated to feed d + 1 coefficients.
std::size_t digest_copies(std::size_t d, std::int64_t r);

/// Converts a digest to a degree-d polynomial with coefficients in [0, r].
///
/// The digest is repeated digest_copies(d, r) times; the concatenation is
/// cut left to right into b-bit blocks and block j, read big-endian, is the
/// coefficient of x^j for j = 0..d.
TropicalPoly digest_to_poly(const HashDigest& digest, std::size_t d, std::int64_t r);

/// p (x) p; used when a degree-2d message polynomial is wanted.
TropicalPoly poly_square_to_2d(const TropicalPoly& p);

/// Message polynomial for the given parameters: digest_to_poly(H(m), d, r),
/// squared when the second scheme is configured with HashDegree::two_d.
TropicalPoly message_poly(std::span<const std::uint8_t> message, const Params& params);

/// Views the characters of a string as message bytes.
inline std::span<const std::uint8_t> message_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace tropsig
