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
#include <span>

#include "tropsig/keygen.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/random.hpp"
#include "tropsig/verify_outcome.hpp"

namespace tropsig {

/// (P, P (+) XU, P (+) YV, P (x) [XU (+) YV] (+) E, N, E), with XU = X (x) U
/// and YV = Y (x) V.
struct SignatureV2 {
  TropicalPoly P;
  TropicalPoly S2;
  TropicalPoly S3;
  TropicalPoly S4;
  TropicalPoly N;
  TropicalPoly E;

  friend bool operator==(const SignatureV2&, const SignatureV2&) = default;
};

/// Degree of the message polynomial: d, or 2d under HashDegree::two_d.
std::size_t v2_hash_degree(const Params& params);
/// Upper bound on message polynomial coefficients: r, or 2r under two_d.
std::int64_t v2_hash_range(const Params& params);
/// Degree of S4 and E: hash degree + 2d (3d by default).
std::size_t v2_masked_degree(const Params& params);
/// Upper bound on S4 and E coefficients: hash range + 2r (3r by default).
std::int64_t v2_masked_range(const Params& params);

/// Signs with fresh U, V, E; self-checks V'2-V'4 and resamples up to
/// kMaxSignAttempts times before throwing InternalError.
SignatureV2 sign_v2(std::span<const std::uint8_t> message, const KeyPair& key, RandomSource& rng);

/// Gates, in order and short-circuiting:
///   V'1  sig.P equals the message polynomial
///   V'2  deg S2 = deg S3 = deg N = 2d; deg S4 = deg E = 3d; no EPS
///   V'3  S2, S3, N in [0, 2r]; S4, E in [0, 3r]
///   V'4  neither S2 nor S3 is a constant multiple of P (+) M or P (+) N
///   V'5  P (x) (S2 (+) S3) (+) E = (P (x) P) (+) S4
///   V'6  (S2 (x) S3) (+) E = (P (x) P) (+) S4 (+) (M (x) N)
/// S4 stands in for R (+) E throughout; R itself is never reconstructed.
VerifyOutcome verify_v2(std::span<const std::uint8_t> message, const SignatureV2& sig,
                        const PublicKey& pub);

}  // namespace tropsig
