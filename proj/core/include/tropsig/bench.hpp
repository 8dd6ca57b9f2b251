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
#include <ostream>
#include <span>
#include <vector>

#include "tropsig/params.hpp"
#include "tropsig/random.hpp"

namespace tropsig {

struct BenchConfig {
  std::size_t d = Params::kDefaultDegree;
  std::int64_t r = Params::kDefaultRange;
  Scheme scheme = Scheme::one;
};

/// One row of the performance table. Sizes use the compact codec.
struct BenchRow {
  std::size_t d = 0;
  std::int64_t r = 0;
  Scheme scheme = Scheme::one;
  double verify_ms_median = 0.0;
  std::size_t sig_bytes = 0;  // median over the row's signatures
  std::size_t pub_bytes = 0;
  std::size_t priv_bytes = 0;
  std::size_t trials = 0;
};

/// For each config: one key pair, `trials` random messages signed, each
/// verification timed on a monotonic clock after one untimed warm-up run.
/// Every verification must accept; a rejection throws InternalError.
std::vector<BenchRow> run_bench(std::span<const BenchConfig> rows, std::size_t trials,
                                RandomSource& rng);

inline constexpr const char* kBenchCsvHeader =
    "d,r,scheme,verify_ms_median,sig_bytes,pub_bytes,priv_bytes,trials";

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace tropsig
