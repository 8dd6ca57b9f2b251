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

#include "tropsig/codec.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <iostream>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "tropsig/encoding.hpp"

namespace tropsig {
namespace {

ParseErrorKind text_error(std::string_view line) {
  try {
    decode_poly_text(line);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << line;
  return ParseErrorKind::structure;
}

TEST(TextCodec, Examples) {
  EXPECT_EQ(encode_poly_text(TropicalPoly::constant(17)), "TP1 d=0 17");
  const auto product =
      otimes(TropicalPoly({Coeff::eps(), Coeff(2), Coeff(3)}), TropicalPoly::from_ints({5, 1}));
  EXPECT_EQ(encode_poly_text(product), "TP1 d=3 inf,7,3,4");
  EXPECT_EQ(decode_poly_text("TP1 d=1 0,0"), TropicalPoly::from_ints({0, 0}));
  EXPECT_EQ(encode_poly_text(TropicalPoly()), "TP1 d=- -");
  EXPECT_TRUE(decode_poly_text("TP1 d=- -").is_eps());
  EXPECT_EQ(decode_poly_text("TP1 d=2 -5,inf,9"),
            TropicalPoly({Coeff(-5), Coeff::eps(), Coeff(9)}));
}

TEST(TextCodec, DistinctErrors) {
  EXPECT_EQ(text_error("TP1 d=2 1,2"), ParseErrorKind::token_count);
  EXPECT_EQ(text_error("TP1 d=1 0,inf"), ParseErrorKind::non_canonical);
  EXPECT_EQ(text_error("TP2 d=1 0,0"), ParseErrorKind::header);
  EXPECT_EQ(text_error("TP1 d=1  0,0"), ParseErrorKind::token);
  EXPECT_EQ(text_error("TP1 d=1 0,01"), ParseErrorKind::token);
  EXPECT_EQ(text_error("TP1 d=1 0,-0"), ParseErrorKind::token);
  EXPECT_EQ(text_error("TP1 d=1 0,+1"), ParseErrorKind::token);
  EXPECT_THROW(decode_poly_text("TP1 d=1 0,1,"), ParseError);
  EXPECT_EQ(text_error("TP1 d=x 0"), ParseErrorKind::token);
  EXPECT_EQ(text_error("TP1 d=0 9223372036854775807"), ParseErrorKind::out_of_range);
  EXPECT_EQ(text_error("TP1 d=0 99999999999999999999999"), ParseErrorKind::out_of_range);
  EXPECT_EQ(text_error("TP1 d=0 4611686018427387904"), ParseErrorKind::out_of_range);
  EXPECT_NO_THROW(decode_poly_text("TP1 d=0 4611686018427387903"));
  EXPECT_NO_THROW(decode_poly_text("TP1 d=0 -4611686018427387903"));
  EXPECT_EQ(text_error("TP1 d=99999999999 0"), ParseErrorKind::out_of_range);
  EXPECT_EQ(text_error(""), ParseErrorKind::header);
}

TEST(TextCodec, RoundTripAndCompactConsistency) {
  testing::PolyGen gen(400);
  for (int i = 0; i < 10000; ++i) {
    const auto p = gen.poly(static_cast<std::size_t>(gen.integer(0, 60)), 0, kCompactMax, 0.1);
    const auto text = encode_poly_text(p);
    ASSERT_EQ(decode_poly_text(text), p) << text;
    ASSERT_EQ(decode_compact(encode_compact(p)), p) << text;
  }
  for (int i = 0; i < 2000; ++i) {
    const auto p =
        gen.poly(static_cast<std::size_t>(gen.integer(0, 30)), -Coeff::kLimit, Coeff::kLimit, 0.2);
    ASSERT_EQ(decode_poly_text(encode_poly_text(p)), p);
  }
}

TEST(CompactCodec, LayoutAndSizes) {
  const auto bytes = encode_compact(TropicalPoly({Coeff(1), Coeff::eps(), Coeff(0x1234)}));
  const std::vector<std::uint8_t> want{2, 0, 0, 0, 1, 0, 0xFF, 0xFF, 0x34, 0x12};
  EXPECT_EQ(bytes, want);

  testing::PolyGen gen(401);
  EXPECT_EQ(encode_compact(gen.poly(150, 0, 127, 0.0)).size(), 306U);

  EXPECT_THROW(encode_compact(TropicalPoly::from_ints({65535})), UsageError);
  EXPECT_THROW(encode_compact(TropicalPoly::from_ints({-1})), UsageError);
  EXPECT_THROW(decode_compact(std::vector<std::uint8_t>{1, 0, 0, 0, 5, 0}), ParseError);
  EXPECT_THROW(decode_compact(std::vector<std::uint8_t>{0, 0, 0, 0, 0xFF, 0xFF}), ParseError);
  EXPECT_THROW(decode_compact(std::vector<std::uint8_t>{0, 0, 0}), ParseError);
  EXPECT_TRUE(decode_compact(encode_compact(TropicalPoly())).is_eps());
}

TEST(CompactCodec, SignatureAndKeySizes) {
  SeededRandom rng(402);
  Params p1;
  const KeyPair k1 = generate_keypair(p1, rng);
  const auto s1 = sign_v1(message_bytes("size"), k1, rng);
  EXPECT_EQ(compact_size(s1), 2724U);
  EXPECT_EQ(compact_size(k1.public_key()), 4U + 301U * 2U);

  Params p2;
  p2.scheme = Scheme::two;
  const KeyPair k2 = generate_keypair(p2, rng);
  const auto s2 = sign_v2(message_bytes("size"), k2, rng);
  // P, S2, S3, N, and two degree-3d components.
  EXPECT_EQ(compact_size(s2), 6U * 4U + (151U + 3U * 301U + 2U * 451U) * 2U);
}

TEST(Files, KeysRoundTrip) {
  SeededRandom rng(403);
  for (Scheme scheme : {Scheme::one, Scheme::two}) {
    Params params;
    params.d = 20;
    params.scheme = scheme;
    const KeyPair key = generate_keypair(params, rng);
    const auto priv_text = write_private_key(key);
    const auto pub_text = write_public_key(key.public_key());
    EXPECT_EQ(priv_text.rfind("TSIG v1 scheme=" + std::to_string(static_cast<int>(scheme)) +
                                  " d=20 r=127\nX=TP1 d=",
                              0),
              0U);
    EXPECT_EQ(read_private_key(priv_text), key);
    EXPECT_EQ(read_public_key(pub_text), key.public_key());
    EXPECT_EQ(peek_scheme(pub_text), scheme);
    EXPECT_THROW(read_public_key(priv_text), ParseError);
  }
}

TEST(Files, TamperedPrivateKeyIsRefused) {
  SeededRandom rng(404);
  Params params;
  params.d = 8;
  const KeyPair key = generate_keypair(params, rng);
  KeyPair bad = key;
  bad.M = scalar_otimes(1, key.M);
  EXPECT_THROW(read_private_key(write_private_key(bad)), ParseError);
}

TEST(Files, SignaturesRoundTrip) {
  SeededRandom rng(405);
  Params p1;
  p1.d = 12;
  const KeyPair k1 = generate_keypair(p1, rng);
  const auto s1 = sign_v1(message_bytes("a"), k1, rng);
  const auto f1 = read_signature_v1(write_signature(s1, p1));
  EXPECT_EQ(f1.sig, s1);
  EXPECT_EQ(f1.params, p1);

  Params p2 = p1;
  p2.scheme = Scheme::two;
  const KeyPair k2 = generate_keypair(p2, rng);
  const auto s2 = sign_v2(message_bytes("a"), k2, rng);
  const auto text2 = write_signature(s2, p2);
  EXPECT_EQ(read_signature_v2(text2).sig, s2);
  EXPECT_THROW(read_signature_v1(text2), ParseError);
  EXPECT_THROW(read_signature_v2(text2.substr(0, text2.size() - 1)), ParseError);
  EXPECT_THROW(read_signature_v2(text2 + "\n"), ParseError);
}

TEST(Files, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "tropsig_codec_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1U);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_file(dir / "missing"), Error);
}

// Mutants never crash the decoder or verifier, and the verifier agrees with the
// schoolbook oracle on every parsed mutant. Some mutants (a raised coefficient
// that never attains a minimum) are valid same-message signatures.
TEST(Fuzz, MutatedSignatureFilesAreJudgedCorrectly) {
  SeededRandom rng(406);
  testing::FileMutator mutator(407);
  const auto msg = message_bytes("fuzzed message");
  for (Scheme scheme : {Scheme::one, Scheme::two}) {
    Params params;
    params.d = 16;
    params.scheme = scheme;
    const KeyPair key = generate_keypair(params, rng);
    const PublicKey pub = key.public_key();
    std::vector<std::string> seeds;
    for (int i = 0; i < 4; ++i) {
      seeds.push_back(scheme == Scheme::one ? write_signature(sign_v1(msg, key, rng), params)
                                            : write_signature(sign_v2(msg, key, rng), params));
      ASSERT_EQ(testing::fuzz_one(seeds.back(), msg, pub), testing::FuzzResult::accepted);
    }
    testing::FuzzTally tally;
    for (int i = 0; i < 5000; ++i) {
      const std::string mutated = mutator.mutate(seeds[static_cast<std::size_t>(i) % seeds.size()]);
      const auto result = testing::fuzz_one(mutated, msg, pub);
      tally.add(result);
      ASSERT_NE(result, testing::FuzzResult::disputed) << mutated;
      ASSERT_NE(result, testing::FuzzResult::other_error) << mutated;
    }
    std::cout << "scheme " << static_cast<int>(scheme) << ": " << tally.parse_errors
              << " parse errors, " << tally.rejected << " gate rejections, " << tally.accepted
              << " valid mutants\n";
  }
}

}  // namespace
}  // namespace tropsig
