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

#include "tropsig/cryptanalysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"
#include "tropsig/scheme_two.hpp"

namespace tropsig {

namespace {

bool poly_less(const TropicalPoly& a, const TropicalPoly& b) {
  return std::ranges::lexicographical_compare(a.coeffs(), b.coeffs());
}

struct FactorPairLess {
  bool operator()(const FactorPair& x, const FactorPair& y) const {
    if (x.first != y.first) return poly_less(x.first, y.first);
    return poly_less(x.second, y.second);
  }
};

using FactorSet = std::set<FactorPair, FactorPairLess>;

std::int64_t min_finite(const TropicalPoly& p) {
  std::int64_t m = Coeff::kLimit;
  for (Coeff c : p.coeffs()) {
    if (c.is_finite()) m = std::min(m, c.raw());
  }
  return m;
}

FactorPair shifted(const TropicalPoly& a, const TropicalPoly& b) {
  const std::int64_t m = min_finite(a);
  return {scalar_otimes(-m, a), scalar_otimes(m, b)};
}

// (base)^exp, or nullopt past `cap`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

// Advances `digits` through the box lo[i] <= digits[i] <= hi; false once wrapped.
bool next_in_box(std::vector<std::int64_t>& digits, std::span<const std::int64_t> lo,
                 std::int64_t hi) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < hi) {
      ++digits[i];
      return true;
    }
    digits[i] = lo[i];
  }
  return false;
}

void search_slice(const TropicalPoly& target, std::size_t d1, std::size_t d2, std::int64_t bound,
                  std::uint64_t a_count, unsigned worker, unsigned workers, FactorSet& found) {
  const auto base = static_cast<std::uint64_t>(bound) + 1;
  std::vector<std::int64_t> a_digits(d1 + 1);
  std::vector<std::int64_t> lower(d2 + 1);
  std::vector<std::int64_t> b_digits(d2 + 1);

  for (std::uint64_t index = worker; index < a_count; index += workers) {
    std::uint64_t rest = index;
    for (auto& digit : a_digits) {
      digit = static_cast<std::int64_t>(rest % base);
      rest /= base;
    }
    const TropicalPoly a = TropicalPoly::from_ints(a_digits);

    const TropicalPoly q = residual_quotient(target, a);
    if (q.size() != d2 + 1) continue;
    bool feasible = true;
    for (std::size_t j = 0; j <= d2 && feasible; ++j) {
      if (q[j].is_eps() || q[j].raw() > bound) {
        feasible = false;
      } else {
        lower[j] = std::max<std::int64_t>(q[j].raw(), 0);
      }
    }
    if (!feasible) continue;

    b_digits = lower;
    do {
      const TropicalPoly b = TropicalPoly::from_ints(b_digits);
      if (otimes(a, b) == target) found.insert(canonical_factor_pair(a, b));
    } while (next_in_box(b_digits, lower, bound));
  }
}

std::vector<std::uint8_t> random_message(RandomSource& rng) {
  std::vector<std::uint8_t> m(32);
  rng.fill(m);
  return m;
}

// A fresh message distinct from `avoid`.
std::vector<std::uint8_t> fresh_message(RandomSource& rng, std::span<const std::uint8_t> avoid) {
  for (;;) {
    auto m = random_message(rng);
    if (!std::ranges::equal(m, avoid)) return m;
  }
}

std::int64_t nonzero_uniform(RandomSource& rng, std::int64_t magnitude) {
  for (;;) {
    const std::int64_t c = rng.uniform(-magnitude, magnitude);
    if (c != 0) return c;
  }
}

std::vector<AttackReport> battery_v1(const KeyPair& oracle, std::size_t trials, RandomSource& rng) {
  const PublicKey pub = oracle.public_key();
  const std::size_t d = pub.params.d;
  const std::int64_t r = pub.params.r;
  Params params = pub.params;
  params.scheme = Scheme::one;

  AttackReport trivial{"trivial", 0,  0,
                       true,      {}, "(P', P'M, P'N, N) with N from an oracle signature"};
  AttackReport scaled{"scaled_trivial", 0, 0, true, {}, "(P', c(x)P'M, (-c)(x)P'N, N), c != 0"};
  AttackReport random_tuple{"random_tuple", 0,  0,
                            false,          {}, "uniform A, B, N of correct degree and range"};
  AttackReport replay{"replay", 0, 0, true, {}, "honest signature presented for another message"};
  AttackReport scaled_honest{"scaled_honest", 0, 0, true, {}, "honest (c(x)A, (-c)(x)B), c = 3r+1"};

  for (std::size_t t = 0; t < trials; ++t) {
    const auto oracle_msg = random_message(rng);
    const SignatureV1 honest = sign_v1(oracle_msg, oracle, rng);
    const auto target_msg = fresh_message(rng, oracle_msg);
    const TropicalPoly p = message_poly(target_msg, params);

    const TropicalPoly pm = otimes(p, pub.M);
    const TropicalPoly pn = otimes(p, honest.N);
    trivial.record(verify_v1(target_msg, {p, pm, pn, honest.N}, pub));

    const std::int64_t c = nonzero_uniform(rng, 3 * r);
    scaled.record(
        verify_v1(target_msg, {p, scalar_otimes(c, pm), scalar_otimes(-c, pn), honest.N}, pub));

    random_tuple.record(
        verify_v1(target_msg,
                  {p, sample_poly(3 * d, 3 * r, rng, false), sample_poly(3 * d, 3 * r, rng, false),
                   sample_poly(2 * d, 2 * r, rng, false)},
                  pub));

    replay.record(verify_v1(target_msg, honest, pub));

    const std::int64_t shift = 3 * r + 1;
    scaled_honest.record(verify_v1(
        oracle_msg,
        {honest.P, scalar_otimes(shift, honest.A), scalar_otimes(-shift, honest.B), honest.N},
        pub));
  }
  return {trivial, scaled, random_tuple, replay, scaled_honest};
}

std::vector<AttackReport> battery_v2(const KeyPair& oracle, std::size_t trials, RandomSource& rng) {
  const PublicKey pub = oracle.public_key();
  Params params = pub.params;
  params.scheme = Scheme::two;
  const std::size_t d = params.d;
  const std::int64_t r = params.r;
  const std::size_t masked_deg = v2_masked_degree(params);
  const std::int64_t masked_range = v2_masked_range(params);

  AttackReport trivial{
      "trivial",
      0,
      0,
      true,
      {},
      "S2 = P'(+)M, S3 = P'(+)N, S4 = P'(x)(S2(+)S3)(+)E; passes V'5 and V'6 by construction"};
  AttackReport scaled{"scaled_trivial", 0, 0, true, {}, "trivial with c(x)S2, (-c)(x)S3, c != 0"};
  AttackReport random_tuple{"random_tuple", 0,  0,
                            false,          {}, "uniform components of correct degree and range"};
  AttackReport replay{"replay", 0, 0, true, {}, "honest signature presented for another message"};
  AttackReport s4_is_e{
      "s4_replaced_by_e", 0, 0, false, {}, "honest signature with S4 := E, same message"};
  AttackReport scaled_honest{
      "scaled_honest", 0, 0, true, {}, "honest (c(x)S2, (-c)(x)S3), c = 2r+1"};

  for (std::size_t t = 0; t < trials; ++t) {
    const auto oracle_msg = random_message(rng);
    const SignatureV2 honest = sign_v2(oracle_msg, oracle, rng);
    const auto target_msg = fresh_message(rng, oracle_msg);
    const TropicalPoly p = message_poly(target_msg, params);

    {
      SignatureV2 forged;
      forged.P = p;
      forged.S2 = oplus(p, pub.M);
      forged.S3 = oplus(p, honest.N);
      forged.N = honest.N;
      forged.E = sample_poly(masked_deg, masked_range, rng, false);
      forged.S4 = oplus(otimes(p, oplus(forged.S2, forged.S3)), forged.E);
      trivial.record(verify_v2(target_msg, forged, pub));

      const std::int64_t c = nonzero_uniform(rng, 2 * r);
      forged.S2 = scalar_otimes(c, forged.S2);
      forged.S3 = scalar_otimes(-c, forged.S3);
      forged.S4 = oplus(otimes(p, oplus(forged.S2, forged.S3)), forged.E);
      scaled.record(verify_v2(target_msg, forged, pub));
    }

    random_tuple.record(verify_v2(
        target_msg,
        {p, sample_poly(2 * d, 2 * r, rng, false), sample_poly(2 * d, 2 * r, rng, false),
         sample_poly(masked_deg, masked_range, rng, false), sample_poly(2 * d, 2 * r, rng, false),
         sample_poly(masked_deg, masked_range, rng, false)},
        pub));

    replay.record(verify_v2(target_msg, honest, pub));

    SignatureV2 swapped = honest;
    swapped.S4 = honest.E;
    s4_is_e.record(verify_v2(oracle_msg, swapped, pub));

    const std::int64_t shift = 2 * r + 1;
    SignatureV2 shifted_sig = honest;
    shifted_sig.S2 = scalar_otimes(shift, honest.S2);
    shifted_sig.S3 = scalar_otimes(-shift, honest.S3);
    scaled_honest.record(verify_v2(oracle_msg, shifted_sig, pub));
  }
  return {trivial, scaled, random_tuple, replay, s4_is_e, scaled_honest};
}

}  // namespace

FactorPair canonical_factor_pair(const TropicalPoly& a, const TropicalPoly& b) {
  FactorPair best = shifted(a, b);
  if (a.size() == b.size()) {
    FactorPair other = shifted(b, a);
    if (FactorPairLess{}(other, best)) best = std::move(other);
  }
  return best;
}

FactorSearchReport brute_force_factor(const TropicalPoly& target, std::size_t d1, std::size_t d2,
                                      std::int64_t coeff_bound, std::uint64_t work_limit,
                                      unsigned workers) {
  if (target.is_eps()) throw UsageError("brute_force_factor: epsilon target");
  if (d1 + d2 != target.degree()) {
    throw UsageError("brute_force_factor: d1 + d2 must equal deg(target)");
  }
  if (coeff_bound < 0 || coeff_bound > (std::int64_t{1} << 30)) {
    throw UsageError("brute_force_factor: coefficient bound out of range");
  }

  const auto base = static_cast<std::uint64_t>(coeff_bound) + 1;
  const auto space = bounded_pow(base, d1 + d2 + 2, work_limit);
  if (!space || *space > work_limit) {
    throw WorkLimitExceeded("brute_force_factor: (" + std::to_string(base) + ")^" +
                            std::to_string(d1 + d2 + 2) + " candidate pairs exceeds work limit " +
                            std::to_string(work_limit));
  }
  const std::uint64_t a_count = *bounded_pow(base, d1 + 1, work_limit);

  const auto start = std::chrono::steady_clock::now();
  workers = std::max(1U, workers);
  std::vector<FactorSet> partial(workers);
  if (workers == 1) {
    search_slice(target, d1, d2, coeff_bound, a_count, 0, 1, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(search_slice, std::cref(target), d1, d2, coeff_bound, a_count, w, workers,
                        std::ref(partial[w]));
    }
    for (auto& th : pool) th.join();
  }

  FactorSet merged;
  for (auto& s : partial) merged.merge(s);

  FactorSearchReport report;
  report.target = target;
  report.d1 = d1;
  report.d2 = d2;
  report.coeff_bound = coeff_bound;
  report.factorizations.assign(merged.begin(), merged.end());
  report.search_space_size = *space;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);

  for (const auto& f : report.factorizations) {
    if (otimes(f.first, f.second) != target) {
      throw InternalError("brute_force_factor: reported pair does not multiply to the target");
    }
  }
  return report;
}

void AttackReport::record(const VerifyOutcome& outcome) {
  ++trials;
  if (outcome.accepted) {
    ++successes;
    ++outcomes["accepted"];
  } else {
    ++outcomes[gate_tag(outcome.scheme, outcome.failed_gate.value_or(Gate::g1))];
  }
}

std::string format_report_text(const AttackReport& report) {
  std::ostringstream os;
  os << report.attack_name << ": " << report.successes << "/" << report.trials << " succeeded";
  if (report.must_fail) os << " (must be 0)";
  os << " [";
  bool first = true;
  for (const auto& [tag, count] : report.outcomes) {
    os << (first ? "" : " ") << tag << "=" << count;
    first = false;
  }
  os << "]";
  if (!report.notes.empty()) os << " -- " << report.notes;
  return os.str();
}

std::string format_report_row(const AttackReport& report) {
  return report.attack_name + "," + std::to_string(report.trials) + "," +
         std::to_string(report.successes);
}

AttackReport division_attack_v1(const SignatureV1& sig, const PublicKey& pub,
                                std::span<const std::uint8_t> fresh) {
  AttackReport report{"division", 0, 0, false, {}, {}};
  Params params = pub.params;
  params.scheme = Scheme::one;

  if (sig.P.is_eps() || sig.A.is_eps() || sig.B.is_eps() || sig.A.degree() < sig.P.degree() ||
      sig.B.degree() < sig.P.degree()) {
    report.trials = 1;
    report.notes = "signature not divisible by P";
    return report;
  }
  const TropicalPoly qa = residual_quotient(sig.A, sig.P);
  const TropicalPoly qb = residual_quotient(sig.B, sig.P);
  const bool exact = otimes(sig.P, qa) == sig.A && otimes(sig.P, qb) == sig.B;

  const TropicalPoly p2 = message_poly(fresh, params);
  SignatureV1 forged{p2, otimes(p2, qa), otimes(p2, qb), sig.N};
  report.record(verify_v1(fresh, forged, pub));
  report.notes = exact ? "P (x) Q reproduced A and B exactly" : "residuation was inexact";
  return report;
}

AttackReport run_division_attack(const Params& params, std::size_t trials, RandomSource& rng) {
  AttackReport total{"division", 0, 0, false, {}, {}};
  std::size_t exact = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const KeyPair key = generate_keypair(params, rng);
    const auto msg = random_message(rng);
    const SignatureV1 sig = sign_v1(msg, key, rng);
    const AttackReport one = division_attack_v1(sig, key.public_key(), fresh_message(rng, msg));
    total.trials += one.trials;
    total.successes += one.successes;
    for (const auto& [tag, n] : one.outcomes) total.outcomes[tag] += n;
    if (otimes(sig.P, residual_quotient(sig.A, sig.P)) == sig.A) ++exact;
  }
  total.notes = "P (x) (A / P) = A in " + std::to_string(exact) + "/" + std::to_string(trials) +
                " trials at d=" + std::to_string(params.d) + ", r=" + std::to_string(params.r);
  return total;
}

std::vector<AttackReport> forgery_battery(const KeyPair& oracle, Scheme scheme, std::size_t trials,
                                          RandomSource& rng) {
  oracle.validate();
  return scheme == Scheme::two ? battery_v2(oracle, trials, rng) : battery_v1(oracle, trials, rng);
}

}  // namespace tropsig
