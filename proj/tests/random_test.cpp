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

#include "tropsig/random.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "tropsig/error.hpp"

namespace tropsig {
namespace {

TEST(SeededRandom, Deterministic) {
  SeededRandom a(42);
  SeededRandom b(42);
  SeededRandom c(43);
  std::vector<std::uint8_t> x(10'000), y(10'000), z(10'000);
  a.fill(x);
  b.fill(y);
  c.fill(z);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

TEST(SeededRandom, ChunkingDoesNotChangeTheStream) {
  SeededRandom a(7);
  SeededRandom b(7);
  std::vector<std::uint8_t> whole(9000);
  a.fill(whole);
  std::vector<std::uint8_t> pieces;
  for (std::size_t n : {1U, 3U, 4095U, 1U, 2000U, 2900U}) {
    std::vector<std::uint8_t> part(n);
    b.fill(part);
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  EXPECT_EQ(whole, pieces);
}

TEST(Uniform, StaysInRangeAndCoversIt) {
  SeededRandom rng(1);
  std::array<int, 128> counts{};
  constexpr int kDraws = 128 * 500;
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.uniform(0, 127);
    ASSERT_GE(v, 0);
    ASSERT_LE(v, 127);
    ++counts[static_cast<std::size_t>(v)];
  }
  // Chi-square with 127 degrees of freedom; 99.99th percentile is about 198.
  double chi2 = 0;
  for (int c : counts) chi2 += (c - 500.0) * (c - 500.0) / 500.0;
  EXPECT_LT(chi2, 198.0);
}

TEST(Uniform, NonPowerOfTwoRangeIsUnbiased) {
  SeededRandom rng(2);
  std::array<int, 3> counts{};
  for (int i = 0; i < 30'000; ++i) ++counts[static_cast<std::size_t>(rng.uniform(-1, 1) + 1)];
  for (int c : counts) EXPECT_NEAR(c, 10'000, 400);
}

TEST(Uniform, EdgeRanges) {
  SystemRandom rng;
  EXPECT_EQ(rng.uniform(5, 5), 5);
  EXPECT_THROW(rng.uniform(6, 5), UsageError);
  const auto v = rng.uniform(INT64_MIN, INT64_MAX);
  (void)v;
  for (int i = 0; i < 100; ++i) {
    const auto w = rng.uniform(-3, 3);
    EXPECT_GE(w, -3);
    EXPECT_LE(w, 3);
  }
}

}  // namespace
}  // namespace tropsig
