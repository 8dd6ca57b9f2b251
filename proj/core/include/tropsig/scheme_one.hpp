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

#include <cstdint>
#include <span>

#include "tropsig/keygen.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/random.hpp"
#include "tropsig/verify_outcome.hpp"

namespace tropsig {

/// (P, P (x) X (x) U, P (x) Y (x) V, N).
struct SignatureV1 {
  TropicalPoly P;
  TropicalPoly A;
  TropicalPoly B;
  TropicalPoly N;

  friend bool operator==(const SignatureV1&, const SignatureV1&) = default;
};

/// Signs with fresh ephemerals. The signer runs the structural gates on its
/// own output and resamples (U, V) up to kMaxSignAttempts times; exceeding
/// that throws InternalError.
SignatureV1 sign_v1(std::span<const std::uint8_t> message, const KeyPair& key, RandomSource& rng);

/// Gates, in order and short-circuiting:
///   V1  sig.P equals the message polynomial
///   V2  deg A = deg B = 3d, deg N = 2d, no EPS coefficients
///   V3  neither A nor B is a constant multiple of P (x) M or P (x) N
///   V4  A, B in [0, 3r]; N in [0, 2r]
///   V5  A (x) B = P (x) P (x) M (x) N
/// Any candidate signature yields an outcome; only an invalid public key
/// throws (UsageError).
VerifyOutcome verify_v1(std::span<const std::uint8_t> message, const SignatureV1& sig,
                        const PublicKey& pub);

inline constexpr int kMaxSignAttempts = 16;

}  // namespace tropsig
