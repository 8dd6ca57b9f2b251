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

#include "tropsig/scheme_one.hpp"

#include <optional>
#include <string>

#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"

namespace tropsig {

namespace {

constexpr Scheme kScheme = Scheme::one;

bool has_degree(const TropicalPoly& p, std::size_t deg) { return !p.is_eps() && p.degree() == deg; }

// V2-V4, on components whose P has already been checked.
std::optional<VerifyOutcome> structural_gates(const SignatureV1& sig, const PublicKey& pub) {
  const std::size_t d = pub.params.d;
  const std::int64_t r = pub.params.r;

  if (!has_degree(sig.A, 3 * d) || !has_degree(sig.B, 3 * d)) {
    return VerifyOutcome::reject(kScheme, Gate::g2, "deg(A) and deg(B) must equal 3d");
  }
  if (!has_degree(sig.N, 2 * d)) {
    return VerifyOutcome::reject(kScheme, Gate::g2, "deg(N) must equal 2d");
  }
  for (const auto* comp : {&sig.A, &sig.B, &sig.N}) {
    if (!comp->coefficients_within(-kComponentMagnitude, kComponentMagnitude)) {
      return VerifyOutcome::reject(kScheme, Gate::g2,
                                   "malformed component: EPS or oversized coefficient");
    }
  }

  // P is the verified message polynomial and every component is bounded by
  // kComponentMagnitude, so the products below cannot overflow.
  const TropicalPoly pm = otimes(sig.P, pub.M);
  const TropicalPoly pn = otimes(sig.P, sig.N);
  for (const auto* comp : {&sig.A, &sig.B}) {
    const char* name = comp == &sig.A ? "A" : "B";
    if (is_constant_multiple(*comp, pm)) {
      return VerifyOutcome::reject(kScheme, Gate::g3,
                                   std::string(name) + " is a constant multiple of P (x) M");
    }
    if (is_constant_multiple(*comp, pn)) {
      return VerifyOutcome::reject(kScheme, Gate::g3,
                                   std::string(name) + " is a constant multiple of P (x) N");
    }
  }

  if (!sig.A.coefficients_within(0, 3 * r) || !sig.B.coefficients_within(0, 3 * r)) {
    return VerifyOutcome::reject(kScheme, Gate::g4, "A or B has coefficients outside [0, 3r]");
  }
  if (!sig.N.coefficients_within(0, 2 * r)) {
    return VerifyOutcome::reject(kScheme, Gate::g4, "N has coefficients outside [0, 2r]");
  }
  return std::nullopt;
}

}  // namespace

SignatureV1 sign_v1(std::span<const std::uint8_t> message, const KeyPair& key, RandomSource& rng) {
  Params params = key.params;
  params.scheme = kScheme;
  params.validate();
  const PublicKey pub{params, key.M};

  SignatureV1 sig;
  sig.P = message_poly(message, params);
  for (int attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
    const EphemeralPair eph = generate_ephemeral(key.X.degree(), key.Y.degree(), params, rng);
    sig.A = otimes(sig.P, otimes(key.X, eph.U));
    sig.B = otimes(sig.P, otimes(key.Y, eph.V));
    sig.N = eph.N;
    if (!structural_gates(sig, pub)) return sig;
  }
  throw InternalError("sign_v1: no acceptable ephemeral pair after " +
                      std::to_string(kMaxSignAttempts) + " attempts");
}

VerifyOutcome verify_v1(std::span<const std::uint8_t> message, const SignatureV1& sig,
                        const PublicKey& pub) {
  Params params = pub.params;
  params.scheme = kScheme;
  PublicKey key{params, pub.M};
  key.validate();

  if (sig.P != message_poly(message, params)) {
    return VerifyOutcome::reject(kScheme, Gate::g1, "P is not the hash polynomial of the message");
  }
  if (auto rejected = structural_gates(sig, key)) return *rejected;

  const TropicalPoly w = otimes(sig.A, sig.B);
  const TropicalPoly expected = otimes(otimes(otimes(sig.P, sig.P), key.M), sig.N);
  if (w != expected) {
    return VerifyOutcome::reject(kScheme, Gate::g5, "A (x) B != P (x) P (x) M (x) N");
  }
  return VerifyOutcome::accept(kScheme);
}

}  // namespace tropsig
