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

#include "tropsig/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>

#include "tropsig/codec.hpp"
#include "tropsig/error.hpp"
#include "tropsig/keygen.hpp"
#include "tropsig/scheme_one.hpp"
#include "tropsig/scheme_two.hpp"

namespace tropsig {

namespace {

template <class T>
T median(std::vector<T> v) {
  std::ranges::sort(v);
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return static_cast<T>((v[n / 2 - 1] + v[n / 2]) / 2);
}

template <class Sign, class Verify>
BenchRow bench_row(const BenchConfig& cfg, std::size_t trials, RandomSource& rng, Sign sign,
                   Verify verify) {
  Params params;
  params.d = cfg.d;
  params.r = cfg.r;
  params.scheme = cfg.scheme;
  const KeyPair key = generate_keypair(params, rng);
  const PublicKey pub = key.public_key();

  std::vector<double> times_ms;
  std::vector<std::size_t> sizes;
  times_ms.reserve(trials);
  sizes.reserve(trials);
  std::vector<std::uint8_t> msg(64);

  for (std::size_t t = 0; t < trials; ++t) {
    rng.fill(msg);
    const auto sig = sign(msg, key, rng);
    if (!verify(msg, sig, pub).accepted) throw InternalError("bench: honest signature rejected");

    const auto start = std::chrono::steady_clock::now();
    const VerifyOutcome outcome = verify(msg, sig, pub);
    const auto stop = std::chrono::steady_clock::now();
    if (!outcome.accepted) throw InternalError("bench: honest signature rejected");

    times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    sizes.push_back(compact_size(sig));
  }

  BenchRow row;
  row.d = cfg.d;
  row.r = cfg.r;
  row.scheme = cfg.scheme;
  row.verify_ms_median = median(times_ms);
  row.sig_bytes = median(sizes);
  row.pub_bytes = compact_size(pub);
  row.priv_bytes = compact_private_size(key);
  row.trials = trials;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const BenchConfig> rows, std::size_t trials,
                                RandomSource& rng) {
  if (trials == 0) throw UsageError("run_bench: trials must be at least 1");
  std::vector<BenchRow> out;
  for (const BenchConfig& cfg : rows) {
    if (cfg.scheme == Scheme::two) {
      out.push_back(bench_row(
          cfg, trials, rng,
          [](auto m, const KeyPair& k, RandomSource& g) { return sign_v2(m, k, g); },
          [](auto m, const SignatureV2& s, const PublicKey& p) { return verify_v2(m, s, p); }));
    } else {
      out.push_back(bench_row(
          cfg, trials, rng,
          [](auto m, const KeyPair& k, RandomSource& g) { return sign_v1(m, k, g); },
          [](auto m, const SignatureV1& s, const PublicKey& p) { return verify_v1(m, s, p); }));
    }
  }
  return out;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& row : rows) {
    out << row.d << ',' << row.r << ',' << static_cast<int>(row.scheme) << ',' << std::fixed
        << std::setprecision(4) << row.verify_ms_median << std::defaultfloat << ',' << row.sig_bytes
        << ',' << row.pub_bytes << ',' << row.priv_bytes << ',' << row.trials << '\n';
  }
}

}  // namespace tropsig
