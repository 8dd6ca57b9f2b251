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

#include "tropsig/encoding.hpp"

#include <gtest/gtest.h>

#include "tropsig/error.hpp"

namespace tropsig {
namespace {

// SHA3-512 of "test", sliced into 151 seven-bit blocks by an independent
// script (Python hashlib + string bit slicing).
constexpr std::int64_t kTestGolden[151] = {
    79,  51,  65,  6,   116, 110, 88,  73,  15,  107, 11,  65,  104, 65, 13,  74,  8,  117, 102,
    123, 73,  40,  86,  46,  94,  100, 126, 0,   46,  94,  110, 16,  8,  67,  1,   38, 60,  10,
    16,  22,  55,  31,  119, 103, 75,  34,  7,   36,  121, 58,  54,  60, 84,  125, 16, 79,  41,
    7,   33,  78,  35,  16,  104, 92,  96,  107, 89,  22,  59,  100, 41, 28,  10,  39, 89,  96,
    67,  58,  55,  44,  36,  71,  117, 69,  96,  116, 32,  70,  101, 4,  58,  115, 61, 100, 84,
    43,  23,  47,  50,  63,  0,   23,  47,  55,  8,   4,   33,  64,  83, 30,  5,   8,  11,  27,
    79,  123, 115, 101, 81,  3,   82,  60,  93,  27,  30,  42,  62,  72, 39,  84,  67, 80,  103,
    17,  72,  52,  46,  48,  53,  108, 75,  29,  114, 20,  78,  5,   19, 108, 112, 33, 93};

TEST(HashMessage, StandardVectors) {
  EXPECT_EQ(hash_message("").hex(),
            "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
            "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26");
  EXPECT_EQ(hash_message("abc").hex(),
            "b751850b1a57168a5693cd924b6b096e08f621827444f70d884f5d0240d2712e"
            "10e116e9192af3c91a7ec57647e3934057340b4cf408d5a56592f8274eec53f0");
  EXPECT_EQ(hash_message("test").hex(),
            "9ece086e9bac491fac5c1d1046ca11d737b92a2b2ebd93f005d7b710110c0a67"
            "8288166e7fbe796883a4f2e9b3ca9f484f521d0ce464345cc1aec96779149c14");
}

TEST(HashMessage, DeterministicAndDistinct) {
  EXPECT_EQ(hash_message("message"), hash_message("message"));
  const char* corpus[] = {"", "a", "b", "ab", "ba", "message", "message ", "Message"};
  for (const char* m1 : corpus) {
    for (const char* m2 : corpus) {
      if (std::string_view(m1) != m2) EXPECT_NE(hash_message(m1), hash_message(m2));
    }
  }
}

TEST(DigestToPoly, BitBudgetAtDefaultParameters) {
  EXPECT_EQ(bits_per_coefficient(127), 7U);
  EXPECT_EQ(digest_copies(150, 127), 3U);
  EXPECT_EQ(151U * 7U, 1057U);
  EXPECT_EQ(digest_copies(72, 127), 1U);  // 73 * 7 = 511
  EXPECT_EQ(digest_copies(73, 127), 2U);
}

TEST(DigestToPoly, AllZeroAndAllOneDigests) {
  HashDigest zero;
  const auto pz = digest_to_poly(zero, 150, 127);
  ASSERT_EQ(pz.degree(), 150U);
  for (Coeff c : pz.coeffs()) EXPECT_EQ(c, Coeff(0));

  HashDigest ones;
  ones.bytes.fill(0xFF);
  const auto po = digest_to_poly(ones, 150, 127);
  ASSERT_EQ(po.degree(), 150U);
  for (Coeff c : po.coeffs()) EXPECT_EQ(c, Coeff(127));
}

TEST(DigestToPoly, GoldenVectorForTest) {
  const auto p = digest_to_poly(hash_message("test"), 150, 127);
  EXPECT_EQ(p, TropicalPoly::from_ints(kTestGolden));
}

TEST(DigestToPoly, SmallParameters) {
  // "abc" at d=8, r=15: first nine nibbles of b7 51 85 0b 1a.
  EXPECT_EQ(digest_to_poly(hash_message("abc"), 8, 15),
            TropicalPoly::from_ints({11, 7, 5, 1, 8, 5, 0, 11, 1}));
}

TEST(DigestToPoly, MsbFirstBitOrder) {
  HashDigest h;
  h.bytes[0] = 0x80;
  const auto p = digest_to_poly(h, 4, 1);
  EXPECT_EQ(p, TropicalPoly::from_ints({1, 0, 0, 0, 0}));
}

TEST(DigestToPoly, WrapsAroundTheDigest) {
  // With b = 1 coefficient 512 reads bit 0 of the second copy.
  HashDigest h;
  h.bytes[0] = 0x80;
  const auto p = digest_to_poly(h, 512, 1);
  EXPECT_EQ(p[0], Coeff(1));
  EXPECT_EQ(p[511], Coeff(0));
  EXPECT_EQ(p[512], Coeff(1));
}

TEST(DigestToPoly, UnsupportedRange) {
  HashDigest h;
  EXPECT_THROW(digest_to_poly(h, 150, 100), UnsupportedParameterError);
  EXPECT_THROW(digest_to_poly(h, 150, 0), UnsupportedParameterError);
  EXPECT_THROW(digest_to_poly(h, 150, -1), UnsupportedParameterError);
}

TEST(DigestToPoly, EveryUsedBitMatters) {
  const HashDigest base = hash_message("flip");
  const auto p0 = digest_to_poly(base, 150, 127);
  for (std::size_t bit = 0; bit < 512; ++bit) {
    HashDigest h = base;
    h.bytes[bit / 8] ^= static_cast<std::uint8_t>(0x80 >> (bit % 8));
    const auto p = digest_to_poly(h, 150, 127);
    ASSERT_NE(p, p0) << "bit " << bit;
    ASSERT_TRUE(p.coefficients_within(0, 127));
    ASSERT_EQ(p.degree(), 150U);
  }
}

TEST(PolySquare, Examples) {
  EXPECT_EQ(poly_square_to_2d(TropicalPoly::constant(3)), TropicalPoly::constant(6));
  EXPECT_EQ(poly_square_to_2d(TropicalPoly::from_ints({0, 0})), TropicalPoly::from_ints({0, 0, 0}));
  EXPECT_EQ(poly_square_to_2d(digest_to_poly(hash_message("x"), 150, 127)).degree(), 300U);
  EXPECT_THROW(poly_square_to_2d(TropicalPoly()), UsageError);
}

TEST(MessagePoly, SchemeTwoDegreeModes) {
  Params params;
  params.d = 16;
  params.r = 127;
  params.scheme = Scheme::two;
  const auto msg = message_bytes("hello");
  EXPECT_EQ(message_poly(msg, params).degree(), 16U);
  params.hash_degree = HashDegree::two_d;
  const auto squared = message_poly(msg, params);
  EXPECT_EQ(squared.degree(), 32U);
  EXPECT_TRUE(squared.coefficients_within(0, 254));
  params.scheme = Scheme::one;
  EXPECT_EQ(message_poly(msg, params).degree(), 16U);
}

}  // namespace
}  // namespace tropsig
