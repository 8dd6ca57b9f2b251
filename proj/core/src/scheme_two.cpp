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

#include "tropsig/scheme_two.hpp"

#include <optional>
#include <string>

#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"
#include "tropsig/scheme_one.hpp"

namespace tropsig {

namespace {

constexpr Scheme kScheme = Scheme::two;

bool has_degree(const TropicalPoly& p, std::size_t deg) { return !p.is_eps() && p.degree() == deg; }

Params as_scheme_two(Params params) {
  params.scheme = kScheme;
  return params;
}

// V'2-V'4.
std::optional<VerifyOutcome> structural_gates(const SignatureV2& sig, const PublicKey& pub) {
  const Params& params = pub.params;
  const std::size_t d = params.d;
  const std::int64_t r = params.r;
  const std::size_t masked_deg = v2_masked_degree(params);

  if (!has_degree(sig.S2, 2 * d) || !has_degree(sig.S3, 2 * d) || !has_degree(sig.N, 2 * d)) {
    return VerifyOutcome::reject(kScheme, Gate::g2, "deg(S2), deg(S3), deg(N) must equal 2d");
  }
  if (!has_degree(sig.S4, masked_deg) || !has_degree(sig.E, masked_deg)) {
    return VerifyOutcome::reject(kScheme, Gate::g2,
                                 "deg(S4) and deg(E) must equal " + std::to_string(masked_deg));
  }
  for (const auto* comp : {&sig.S2, &sig.S3, &sig.S4, &sig.N, &sig.E}) {
    if (!comp->coefficients_within(-kComponentMagnitude, kComponentMagnitude)) {
      return VerifyOutcome::reject(kScheme, Gate::g2,
                                   "malformed component: EPS or oversized coefficient");
    }
  }

  if (!sig.S2.coefficients_within(0, 2 * r) || !sig.S3.coefficients_within(0, 2 * r)) {
    return VerifyOutcome::reject(kScheme, Gate::g3, "S2 or S3 has coefficients outside [0, 2r]");
  }
  if (!sig.N.coefficients_within(0, 2 * r)) {
    return VerifyOutcome::reject(kScheme, Gate::g3, "N has coefficients outside [0, 2r]");
  }
  const std::int64_t masked_range = v2_masked_range(params);
  if (!sig.S4.coefficients_within(0, masked_range) || !sig.E.coefficients_within(0, masked_range)) {
    return VerifyOutcome::reject(kScheme, Gate::g3, "S4 or E has coefficients outside range");
  }

  const TropicalPoly pm = oplus(sig.P, pub.M);
  const TropicalPoly pn = oplus(sig.P, sig.N);
  for (const auto* comp : {&sig.S2, &sig.S3}) {
    const char* name = comp == &sig.S2 ? "S2" : "S3";
    if (is_constant_multiple(*comp, pm)) {
      return VerifyOutcome::reject(kScheme, Gate::g4,
                                   std::string(name) + " is a constant multiple of P (+) M");
    }
    if (is_constant_multiple(*comp, pn)) {
      return VerifyOutcome::reject(kScheme, Gate::g4,
                                   std::string(name) + " is a constant multiple of P (+) N");
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t v2_hash_degree(const Params& params) {
  return params.hash_degree == HashDegree::two_d ? 2 * params.d : params.d;
}

std::int64_t v2_hash_range(const Params& params) {
  return params.hash_degree == HashDegree::two_d ? 2 * params.r : params.r;
}

std::size_t v2_masked_degree(const Params& params) { return v2_hash_degree(params) + 2 * params.d; }

std::int64_t v2_masked_range(const Params& params) { return v2_hash_range(params) + 2 * params.r; }

SignatureV2 sign_v2(std::span<const std::uint8_t> message, const KeyPair& key, RandomSource& rng) {
  const Params params = as_scheme_two(key.params);
  params.validate();
  const PublicKey pub{params, key.M};

  SignatureV2 sig;
  sig.P = message_poly(message, params);
  for (int attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
    const EphemeralPair eph = generate_ephemeral(key.X.degree(), key.Y.degree(), params, rng);
    const TropicalPoly xu = otimes(key.X, eph.U);
    const TropicalPoly yv = otimes(key.Y, eph.V);
    sig.E = sample_poly(v2_masked_degree(params), v2_masked_range(params), rng, false);
    sig.S2 = oplus(sig.P, xu);
    sig.S3 = oplus(sig.P, yv);
    sig.S4 = oplus(otimes(sig.P, oplus(xu, yv)), sig.E);
    sig.N = eph.N;
    if (!structural_gates(sig, pub)) return sig;
  }
  throw InternalError("sign_v2: no acceptable ephemeral pair after " +
                      std::to_string(kMaxSignAttempts) + " attempts");
}

VerifyOutcome verify_v2(std::span<const std::uint8_t> message, const SignatureV2& sig,
                        const PublicKey& pub) {
  const PublicKey key{as_scheme_two(pub.params), pub.M};
  key.validate();

  if (sig.P != message_poly(message, key.params)) {
    return VerifyOutcome::reject(kScheme, Gate::g1, "P is not the hash polynomial of the message");
  }
  if (auto rejected = structural_gates(sig, key)) return *rejected;

  const TropicalPoly pp = otimes(sig.P, sig.P);
  const TropicalPoly pp_s4 = oplus(pp, sig.S4);

  const TropicalPoly lhs5 = oplus(otimes(sig.P, oplus(sig.S2, sig.S3)), sig.E);
  if (lhs5 != pp_s4) {
    return VerifyOutcome::reject(kScheme, Gate::g5, "P (x) (S2 (+) S3) (+) E != (P (x) P) (+) S4");
  }

  const TropicalPoly lhs6 = oplus(otimes(sig.S2, sig.S3), sig.E);
  const TropicalPoly rhs6 = oplus(pp_s4, otimes(key.M, sig.N));
  if (lhs6 != rhs6) {
    return VerifyOutcome::reject(kScheme, Gate::g6,
                                 "(S2 (x) S3) (+) E != (P (x) P) (+) S4 (+) (M (x) N)");
  }
  return VerifyOutcome::accept(kScheme);
}

}  // namespace tropsig
