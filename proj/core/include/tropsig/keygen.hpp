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

#include "tropsig/params.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/random.hpp"

namespace tropsig {

struct PublicKey {
  Params params;
  TropicalPoly M;

  /// Degree 2d, coefficients in [0, 2r]. Throws UsageError otherwise.
  void validate() const;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct KeyPair {
  Params params;
  TropicalPoly X;
  TropicalPoly Y;
  TropicalPoly M;  // X (x) Y

  PublicKey public_key() const { return {params, M}; }

  /// Checks degrees, ranges, zeroed end coefficients and M = X (x) Y.
  /// Throws UsageError on the first violation.
  void validate() const;

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

struct EphemeralPair {
  TropicalPoly U;
  TropicalPoly V;
  TropicalPoly N;  // U (x) V
};

/// Degree-`degree` polynomial with coefficients uniform in [0, r]. With
/// `zero_ends`, the constant and leading coefficients are then set to 0.
TropicalPoly sample_poly(std::size_t degree, std::int64_t r, RandomSource& rng, bool zero_ends);

/// Private factors with deg(X) uniform in [ceil(3d/4), floor(5d/4)],
/// deg(Y) = 2d - deg(X), and zeroed end coefficients.
KeyPair generate_keypair(const Params& params, RandomSource& rng);

/// Per-signature U, V with deg(U) = deg(Y), deg(V) = deg(X), zeroed ends.
EphemeralPair generate_ephemeral(std::size_t deg_x, std::size_t deg_y, const Params& params,
                                 RandomSource& rng);

}  // namespace tropsig
