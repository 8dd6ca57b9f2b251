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

#include "tropsig/keygen.hpp"

#include <string>

#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"

namespace tropsig {

void Params::validate() const {
  if (d < kMinDegree) {
    throw UsageError("degree parameter d must be at least " + std::to_string(kMinDegree) +
                     ", got " + std::to_string(d));
  }
  if (d > (std::size_t{1} << 20)) throw UsageError("degree parameter d is unreasonably large");
  if (r > kMaxRange) throw UnsupportedParameterError("coefficient range r too large");
  bits_per_coefficient(r);
  if (scheme != Scheme::one && scheme != Scheme::two) throw UsageError("unknown scheme");
}

void PublicKey::validate() const {
  params.validate();
  if (M.is_eps() || M.degree() != 2 * params.d) {
    throw UsageError("public polynomial M must have degree 2d");
  }
  if (!M.coefficients_within(0, 2 * params.r)) {
    throw UsageError("public polynomial M has coefficients outside [0, 2r]");
  }
}

void KeyPair::validate() const {
  params.validate();
  const auto check_factor = [this](const TropicalPoly& p, const char* name) {
    if (p.is_eps()) throw UsageError(std::string(name) + " is the epsilon polynomial");
    if (!p.coefficients_within(0, params.r)) {
      throw UsageError(std::string(name) + " has coefficients outside [0, r]");
    }
    if (p[0].raw() != 0 || p[p.degree()].raw() != 0) {
      throw UsageError(std::string(name) + " does not have zeroed end coefficients");
    }
  };
  check_factor(X, "X");
  check_factor(Y, "Y");
  if (X.degree() < params.min_x_degree() || X.degree() > params.max_x_degree()) {
    throw UsageError("deg(X) outside [ceil(3d/4), floor(5d/4)]");
  }
  if (X.degree() + Y.degree() != 2 * params.d) throw UsageError("deg(X) + deg(Y) != 2d");
  if (M != otimes(X, Y)) throw UsageError("M != X (x) Y");
}

TropicalPoly sample_poly(std::size_t degree, std::int64_t r, RandomSource& rng, bool zero_ends) {
  std::vector<Coeff> coeffs;
  coeffs.reserve(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) coeffs.emplace_back(rng.uniform(0, r));
  if (zero_ends) {
    coeffs.front() = Coeff(0);
    coeffs.back() = Coeff(0);
  }
  return TropicalPoly(std::move(coeffs));
}

KeyPair generate_keypair(const Params& params, RandomSource& rng) {
  params.validate();
  const auto deg_x =
      static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(params.min_x_degree()),
                                           static_cast<std::int64_t>(params.max_x_degree())));
  const std::size_t deg_y = 2 * params.d - deg_x;

  KeyPair kp;
  kp.params = params;
  kp.X = sample_poly(deg_x, params.r, rng, true);
  kp.Y = sample_poly(deg_y, params.r, rng, true);
  kp.M = otimes(kp.X, kp.Y);
  return kp;
}

EphemeralPair generate_ephemeral(std::size_t deg_x, std::size_t deg_y, const Params& params,
                                 RandomSource& rng) {
  params.validate();
  if (deg_x + deg_y != 2 * params.d) {
    throw UsageError("ephemeral degrees must sum to 2d");
  }
  EphemeralPair e;
  e.U = sample_poly(deg_y, params.r, rng, true);
  e.V = sample_poly(deg_x, params.r, rng, true);
  e.N = otimes(e.U, e.V);
  return e;
}

}  // namespace tropsig
