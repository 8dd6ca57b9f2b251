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

// Desk-scale attack experiments: an exhaustive factoring oracle for tiny
// polynomials, the residuation-based division attack on scheme one, and a
// fixed battery of forgery attempts against both schemes.
//
// An attack succeeds only when a verifier accepts a signature on a message
// the honest signer never signed.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropsig/keygen.hpp"
#include "tropsig/params.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/random.hpp"
#include "tropsig/scheme_one.hpp"

namespace tropsig {

struct FactorPair {
  TropicalPoly first;
  TropicalPoly second;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Representative of (a, b) under (a, b) ~ (c (x) a, (-c) (x) b), and
/// also (a, b) ~ (b, a) when the degrees agree. The representative has
/// min coefficient 0 in its first factor and, for equal degrees, is the
/// lexicographically smaller of the two orientations.
FactorPair canonical_factor_pair(const TropicalPoly& a, const TropicalPoly& b);

struct FactorSearchReport {
  static constexpr const char* kEquivalence =
      "(a,b) ~ (c(x)a, (-c)(x)b); (a,b) ~ (b,a) when deg a = deg b";

  TropicalPoly target;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::int64_t coeff_bound = 0;
  /// One canonical representative per equivalence class, sorted.
  std::vector<FactorPair> factorizations;
  /// (coeff_bound + 1)^(d1 + d2 + 2) candidate pairs.
  std::uint64_t search_space_size = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

/// Every pair (a, b) with deg a = d1, deg b = d2 and all coefficients in
/// [0, coeff_bound] such that a (x) b = target, up to equivalence.
///
/// For each a, candidates b are restricted to b >= residual_quotient(target,
/// a), which every exact cofactor satisfies, so the search stays exhaustive.
/// `workers` threads split the enumeration of a.
///
/// Throws UsageError if d1 + d2 != deg(target) or coeff_bound < 0, and
/// WorkLimitExceeded if the candidate count exceeds work_limit.
FactorSearchReport brute_force_factor(const TropicalPoly& target, std::size_t d1, std::size_t d2,
                                      std::int64_t coeff_bound,
                                      std::uint64_t work_limit = kDefaultWorkLimit,
                                      unsigned workers = 1);

struct AttackReport {
  std::string attack_name;
  std::size_t trials = 0;
  std::size_t successes = 0;
  /// Deterministic attacks must never succeed; randomized ones are measured.
  bool must_fail = false;
  /// Verifier outcomes by gate tag ("V3", "V'4", "accepted", ...).
  std::map<std::string, std::size_t> outcomes;
  std::string notes;

  void record(const VerifyOutcome& outcome);
  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// Human-readable summary line.
std::string format_report_text(const AttackReport& report);
/// Machine-readable row: name,trials,successes
std::string format_report_row(const AttackReport& report);

/// Divides A and B by the public P, re-multiplies the quotients by the
/// fresh message's polynomial P', and submits (P', P' (x) Q_A,
/// P' (x) Q_B, N) for fresh_message. One trial.
AttackReport division_attack_v1(const SignatureV1& sig, const PublicKey& pub,
                                std::span<const std::uint8_t> fresh_message);

/// `trials` independent rounds of keygen, honest signature, division
/// attack. Notes record how often P (x) Q_A reproduced A exactly.
AttackReport run_division_attack(const Params& params, std::size_t trials, RandomSource& rng);

/// The fixed forgery battery for one scheme. The key pair serves only as
/// a signing oracle for messages the attacker later abandons; forged
/// tuples are built from the public key and those signatures alone.
///
/// Scheme one: trivial (P', P'M, P'N, N); scaled_trivial with c and -c;
/// random_tuple; replay; scaled_honest (out-of-range shift).
/// Scheme two: the analogous tuples built with (+), plus s4_replaced_by_e.
std::vector<AttackReport> forgery_battery(const KeyPair& oracle, Scheme scheme, std::size_t trials,
                                          RandomSource& rng);

}  // namespace tropsig
