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

#include <gtest/gtest.h>

#include <iostream>

#include "oracles.hpp"
#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"

namespace tropsig {
namespace {

Params params_d(std::size_t d) {
  Params p;
  p.d = d;
  return p;
}

TEST(SchemeOne, HonestSignaturesVerify) {
  SeededRandom rng(100);
  for (std::size_t d : {4U, 8U, 16U, 150U}) {
    const KeyPair key = generate_keypair(params_d(d), rng);
    for (int i = 0; i < 50; ++i) {
      const std::string msg = "message " + std::to_string(i);
      const SignatureV1 sig = sign_v1(message_bytes(msg), key, rng);
      EXPECT_EQ(sig.P.degree(), d);
      EXPECT_EQ(sig.A.degree(), 3 * d);
      EXPECT_EQ(sig.B.degree(), 3 * d);
      EXPECT_EQ(sig.N.degree(), 2 * d);
      const auto outcome = verify_v1(message_bytes(msg), sig, key.public_key());
      ASSERT_TRUE(outcome.accepted) << "d=" << d << " " << outcome.describe();
      EXPECT_FALSE(outcome.failed_gate.has_value());
    }
  }
}

TEST(SchemeOne, SignaturesOfTheSameMessageDiffer) {
  SeededRandom rng(101);
  const KeyPair key = generate_keypair(Params{}, rng);
  const auto msg = message_bytes("same message");
  const SignatureV1 s1 = sign_v1(msg, key, rng);
  const SignatureV1 s2 = sign_v1(msg, key, rng);
  EXPECT_EQ(s1.P, s2.P);
  EXPECT_NE(s1.A, s2.A);
  EXPECT_NE(s1.B, s2.B);
  EXPECT_NE(s1.N, s2.N);
}

TEST(SchemeOne, TrivialForgeryIsRejected) {
  SeededRandom rng(102);
  const KeyPair key = generate_keypair(Params{}, rng);
  const auto honest = sign_v1(message_bytes("m"), key, rng);
  const auto msg = message_bytes("forged");
  const TropicalPoly p = message_poly(msg, key.params);
  const SignatureV1 forged{p, otimes(p, key.M), otimes(p, honest.N), honest.N};
  // The forged tuple satisfies the final identity; only the constant-multiple gate stops it.
  EXPECT_EQ(otimes(forged.A, forged.B), otimes(otimes(otimes(p, p), key.M), honest.N));
  const auto outcome = verify_v1(msg, forged, key.public_key());
  EXPECT_FALSE(outcome.accepted);
  EXPECT_EQ(outcome.failed_gate, Gate::g3);
}

TEST(SchemeOne, CrossMessageReplayFailsHashGate) {
  SeededRandom rng(103);
  const KeyPair key = generate_keypair(Params{}, rng);
  const auto sig = sign_v1(message_bytes("m"), key, rng);
  const auto outcome = verify_v1(message_bytes("m'"), sig, key.public_key());
  EXPECT_FALSE(outcome.accepted);
  EXPECT_EQ(outcome.failed_gate, Gate::g1);
  EXPECT_EQ(gate_tag(Scheme::one, *outcome.failed_gate), "V1");
}

TEST(SchemeOne, MalformedComponentsFailDegreeGate) {
  SeededRandom rng(104);
  const KeyPair key = generate_keypair(params_d(8), rng);
  const auto msg = message_bytes("m");
  const auto sig = sign_v1(msg, key, rng);
  const auto pub = key.public_key();

  auto with_eps = sig;
  std::vector<Coeff> a(sig.A.coeffs().begin(), sig.A.coeffs().end());
  a[3] = Coeff::eps();
  with_eps.A = TropicalPoly(a);
  EXPECT_EQ(verify_v1(msg, with_eps, pub).failed_gate, Gate::g2);

  auto no_n = sig;
  no_n.N = TropicalPoly();
  EXPECT_EQ(verify_v1(msg, no_n, pub).failed_gate, Gate::g2);

  auto short_b = sig;
  short_b.B = TropicalPoly::from_ints({1, 2, 3});
  EXPECT_EQ(verify_v1(msg, short_b, pub).failed_gate, Gate::g2);

  auto huge = sig;
  std::vector<Coeff> n(sig.N.coeffs().begin(), sig.N.coeffs().end());
  n[1] = Coeff(Coeff::kLimit);
  huge.N = TropicalPoly(n);
  EXPECT_EQ(verify_v1(msg, huge, pub).failed_gate, Gate::g2);
}

TEST(SchemeOne, RangeGate) {
  SeededRandom rng(105);
  const KeyPair key = generate_keypair(params_d(8), rng);
  const auto msg = message_bytes("m");
  const auto sig = sign_v1(msg, key, rng);

  auto shifted = sig;
  shifted.A = scalar_otimes(3 * 127 + 1, sig.A);
  shifted.B = scalar_otimes(-(3 * 127 + 1), sig.B);
  // The product is unchanged, so only the range gate can object.
  EXPECT_EQ(otimes(shifted.A, shifted.B), otimes(sig.A, sig.B));
  EXPECT_EQ(verify_v1(msg, shifted, key.public_key()).failed_gate, Gate::g4);

  auto big_n = sig;
  big_n.N = scalar_otimes(255, sig.N);
  EXPECT_EQ(verify_v1(msg, big_n, key.public_key()).failed_gate, Gate::g4);
}

TEST(SchemeOne, PerturbedNIsRejectedExactlyWhenTheProductChanges) {
  // Raising one coefficient of N leaves P(x)P(x)M(x)N unchanged when that
  // coefficient never attains a minimum, so the rejection rate is measured.
  SeededRandom rng(106);
  for (std::size_t d : {16U, 150U}) {
    const int trials = d == 16 ? 1000 : 200;
    int rejected = 0;
    for (int t = 0; t < trials; ++t) {
      const KeyPair key = generate_keypair(params_d(d), rng);
      const auto msg = message_bytes("perturb");
      auto sig = sign_v1(msg, key, rng);
      std::vector<Coeff> n(sig.N.coeffs().begin(), sig.N.coeffs().end());
      const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(2 * d)));
      n[k] = Coeff(n[k].raw() + 1);
      sig.N = TropicalPoly(n);

      const auto outcome = verify_v1(msg, sig, key.public_key());
      const bool identity =
          otimes(sig.A, sig.B) == otimes(otimes(otimes(sig.P, sig.P), key.M), sig.N);
      const bool in_range = sig.N.coefficients_within(0, 2 * 127);
      ASSERT_EQ(outcome.accepted, identity && in_range) << outcome.describe();
      if (!outcome.accepted) {
        ++rejected;
        ASSERT_TRUE(outcome.failed_gate == Gate::g4 || outcome.failed_gate == Gate::g5);
      }
    }
    std::cout << "d=" << d << ": perturbed N rejected in " << rejected << "/" << trials
              << " trials\n";
    EXPECT_GT(rejected, 0);
  }
}

TEST(SchemeOne, FinalIdentityHoldsSymbolically) {
  testing::PolyGen gen(107);
  for (int i = 0; i < 300; ++i) {
    const auto deg = [&] { return static_cast<std::size_t>(gen.integer(0, 25)); };
    const auto x = gen.poly(deg(), -200, 200, 0.1);
    const auto y = gen.poly(deg(), -200, 200, 0.1);
    const auto u = gen.poly(deg(), -200, 200, 0.1);
    const auto v = gen.poly(deg(), -200, 200, 0.1);
    const auto p = gen.poly(deg(), -200, 200, 0.1);
    ASSERT_EQ(otimes(otimes(otimes(p, x), u), otimes(otimes(p, y), v)),
              otimes(otimes(otimes(p, p), otimes(x, y)), otimes(u, v)));
  }
}

TEST(SchemeOne, InvalidPublicKeyThrows) {
  SeededRandom rng(108);
  const KeyPair key = generate_keypair(params_d(8), rng);
  const auto sig = sign_v1(message_bytes("m"), key, rng);
  PublicKey pub = key.public_key();
  pub.M = TropicalPoly::from_ints({1, 2});
  EXPECT_THROW(verify_v1(message_bytes("m"), sig, pub), UsageError);
}

TEST(VerifyOutcome, Describe) {
  EXPECT_EQ(VerifyOutcome::accept(Scheme::one).describe(), "accepted");
  EXPECT_EQ(VerifyOutcome::reject(Scheme::two, Gate::g4, "x").describe(), "rejected at V'4: x");
}

}  // namespace
}  // namespace tropsig
