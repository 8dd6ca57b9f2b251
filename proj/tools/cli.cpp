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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "tropsig/tropsig.hpp"

namespace tropsig::cli {

namespace {

#ifdef TROPSIG_ENABLE_TEST_SEED
constexpr bool kSeedEnabled = true;
#else
constexpr bool kSeedEnabled = false;
#endif

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
  if (hex.empty() || hex.size() % 2 != 0)
    throw UsageError("--seed must be an even-length hex string");
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  const auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw UsageError("--seed must be hexadecimal");
  };
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return out;
}

std::unique_ptr<RandomSource> make_rng(const std::string& seed_hex, std::ostream& err) {
  if (!seed_hex.empty()) {
    if (kSeedEnabled) return std::make_unique<SeededRandom>(parse_hex(seed_hex));
    err << "warning: --seed ignored (build with TROPSIG_ENABLE_TEST_SEED to honor it)\n";
  }
  return std::make_unique<SystemRandom>();
}

std::string read_message(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_file(path);
}

Scheme to_scheme(int s) { return s == 2 ? Scheme::two : Scheme::one; }

void require_scheme(Scheme expected, Scheme found, const char* what) {
  if (expected != found) {
    throw UsageError(std::string(what) + " was written for scheme " +
                     std::to_string(static_cast<int>(found)) + ", not scheme " +
                     std::to_string(static_cast<int>(expected)));
  }
}

struct KeygenArgs {
  int scheme = 1;
  std::size_t d = Params::kDefaultDegree;
  std::int64_t r = Params::kDefaultRange;
  std::string seed;
  std::string priv;
  std::string pub;
};

struct SignArgs {
  int scheme = 1;
  std::string priv;
  std::string msg;
  std::string sig;
  std::string seed;
};

struct VerifyArgs {
  int scheme = 1;
  std::string pub;
  std::string msg;
  std::string sig;
};

struct AttackArgs {
  std::string name;
  int scheme = 1;
  std::optional<std::size_t> d;
  std::optional<std::int64_t> r;
  std::optional<std::size_t> trials;
  std::uint64_t work_limit = kDefaultWorkLimit;
};

struct BenchArgs {
  std::vector<std::size_t> d{100, 150, 200};
  std::int64_t r = Params::kDefaultRange;
  std::size_t trials = 30;
  std::vector<int> schemes{1, 2};
  std::string csv;
};

int do_keygen(const KeygenArgs& a, std::ostream& out, std::ostream& err) {
  Params params;
  params.d = a.d;
  params.r = a.r;
  params.scheme = to_scheme(a.scheme);
  const auto rng = make_rng(a.seed, err);
  const KeyPair key = generate_keypair(params, *rng);
  write_file_atomic(a.priv, write_private_key(key));
  write_file_atomic(a.pub, write_public_key(key.public_key()));
  out << "keygen: d=" << params.d << " r=" << params.r << " deg(X)=" << key.X.degree()
      << " deg(Y)=" << key.Y.degree() << '\n';
  return kExitOk;
}

int do_sign(const SignArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Scheme scheme = to_scheme(a.scheme);
  const KeyPair key = read_private_key(read_file(a.priv));
  require_scheme(scheme, key.params.scheme, "private key");
  const std::string msg = read_message(a.msg, in);
  const auto rng = make_rng(a.seed, err);
  if (scheme == Scheme::two) {
    write_file_atomic(a.sig, write_signature(sign_v2(message_bytes(msg), key, *rng), key.params));
  } else {
    write_file_atomic(a.sig, write_signature(sign_v1(message_bytes(msg), key, *rng), key.params));
  }
  out << "signed " << msg.size() << " bytes\n";
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const Scheme scheme = to_scheme(a.scheme);
  const PublicKey pub = read_public_key(read_file(a.pub));
  require_scheme(scheme, pub.params.scheme, "public key");
  const std::string sig_text = read_file(a.sig);
  const std::string msg = read_message(a.msg, in);

  VerifyOutcome outcome;
  if (scheme == Scheme::two) {
    const auto file = read_signature_v2(sig_text);
    if (file.params != pub.params)
      throw ParseError(ParseErrorKind::structure,
                       "signature parameters do not match the public key");
    outcome = verify_v2(message_bytes(msg), file.sig, pub);
  } else {
    const auto file = read_signature_v1(sig_text);
    if (file.params != pub.params)
      throw ParseError(ParseErrorKind::structure,
                       "signature parameters do not match the public key");
    outcome = verify_v1(message_bytes(msg), file.sig, pub);
  }

  if (outcome.accepted) {
    out << "accepted\n";
    return kExitOk;
  }
  out << "rejected " << gate_tag(outcome.scheme, *outcome.failed_gate) << ": " << outcome.detail
      << '\n';
  return kExitRejected;
}

int do_attack(const AttackArgs& a, std::ostream& out) {
  SystemRandom rng;
  if (a.name == "bruteforce") {
    // Here d is the degree of each factor and r the coefficient bound.
    const std::size_t d = a.d.value_or(2);
    const std::int64_t bound = a.r.value_or(2);
    const std::size_t trials = a.trials.value_or(10);
    AttackReport summary{"bruteforce", 0, 0, false, {}, "generating pair recovered up to shift"};
    for (std::size_t t = 0; t < trials; ++t) {
      const TropicalPoly x = sample_poly(d, bound, rng, false);
      const TropicalPoly y = sample_poly(d, bound, rng, false);
      const auto report = brute_force_factor(otimes(x, y), d, d, bound, a.work_limit);
      const bool found = std::ranges::find(report.factorizations, canonical_factor_pair(x, y)) !=
                         report.factorizations.end();
      ++summary.trials;
      if (found) ++summary.successes;
      out << "target " << encode_poly_text(report.target) << ": " << report.factorizations.size()
          << " factorization(s), " << report.search_space_size << " candidates, "
          << std::chrono::duration<double, std::milli>(report.elapsed).count() << " ms"
          << (found ? "" : ", generating pair MISSING") << '\n';
    }
    out << format_report_text(summary) << '\n';
    out << "row," << format_report_row(summary) << '\n';
    return summary.successes == summary.trials ? kExitOk : kExitRejected;
  }

  Params params;
  params.d = a.d.value_or(a.name == "division" ? 8 : 16);
  params.r = a.r.value_or(Params::kDefaultRange);
  params.scheme = to_scheme(a.scheme);
  params.validate();

  std::vector<AttackReport> reports;
  if (a.name == "division") {
    reports.push_back(run_division_attack(params, a.trials.value_or(500), rng));
  } else {
    const KeyPair key = generate_keypair(params, rng);
    reports = forgery_battery(key, params.scheme, a.trials.value_or(100), rng);
  }
  int rc = kExitOk;
  for (const auto& rep : reports) {
    out << format_report_text(rep) << '\n';
    if (rep.must_fail && rep.successes > 0) rc = kExitRejected;
  }
  for (const auto& rep : reports) out << "row," << format_report_row(rep) << '\n';
  return rc;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<BenchConfig> configs;
  for (std::size_t d : a.d) {
    for (int s : a.schemes) configs.push_back({d, a.r, to_scheme(s)});
  }
  SystemRandom rng;
  const auto rows = run_bench(configs, a.trials, rng);
  if (a.csv.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    write_file_atomic(a.csv, csv.str());
    out << "wrote " << rows.size() << " rows to " << a.csv << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tropical (min-plus) polynomial signatures"};
  app.require_subcommand(1);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--scheme", kg.scheme)->check(CLI::IsMember({1, 2}))->required();
  keygen->add_option("--d", kg.d, "Degree parameter");
  keygen->add_option("--r", kg.r, "Coefficient range (2^b - 1)");
  keygen->add_option("--seed", kg.seed, "Hex seed (test builds only)");
  keygen->add_option("--priv", kg.priv, "Private key output")->required();
  keygen->add_option("--pub", kg.pub, "Public key output")->required();

  SignArgs sg;
  auto* sign = app.add_subcommand("sign", "Sign a message");
  sign->add_option("--scheme", sg.scheme)->check(CLI::IsMember({1, 2}))->required();
  sign->add_option("--priv", sg.priv)->required();
  sign->add_option("--msg", sg.msg, "Message file, or - for stdin")->required();
  sign->add_option("--sig", sg.sig, "Signature output")->required();
  sign->add_option("--seed", sg.seed, "Hex seed (test builds only)");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Verify a signature (exit 0 accepted, 1 rejected)");
  verify->add_option("--scheme", vf.scheme)->check(CLI::IsMember({1, 2}))->required();
  verify->add_option("--pub", vf.pub)->required();
  verify->add_option("--msg", vf.msg, "Message file, or - for stdin")->required();
  verify->add_option("--sig", vf.sig)->required();

  AttackArgs at;
  auto* attack = app.add_subcommand("attack", "Run a desk-scale attack experiment");
  attack->add_option("--name", at.name)
      ->check(CLI::IsMember({"bruteforce", "division", "battery"}))
      ->required();
  attack->add_option("--scheme", at.scheme, "Scheme for the battery")->check(CLI::IsMember({1, 2}));
  attack->add_option("--d", at.d);
  attack->add_option("--r", at.r);
  attack->add_option("--trials", at.trials);
  attack->add_option("--work-limit", at.work_limit);

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Reproduce the performance table");
  bench->add_option("--d", bn.d, "Degree parameter (repeatable)");
  bench->add_option("--r", bn.r);
  bench->add_option("--trials", bn.trials)->check(CLI::PositiveNumber);
  bench->add_option("--scheme", bn.schemes, "Scheme(s) to benchmark")->check(CLI::IsMember({1, 2}));
  bench->add_option("--csv", bn.csv, "Write CSV here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) return do_keygen(kg, out, err);
    if (*sign) return do_sign(sg, in, out, err);
    if (*verify) return do_verify(vf, in, out);
    if (*attack) return do_attack(at, out);
    if (*bench) return do_bench(bn, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tropsig::cli
