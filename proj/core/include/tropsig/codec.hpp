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

// Wire formats.
//
// Polynomial text record:   TP1 d=<degree> <c0>,<c1>,...,<cd>
//   decimal integers, `inf` for EPS, no whitespace inside the list;
//   the epsilon polynomial is `TP1 d=- -`.
//
// Compact record: u32 LE degree, then degree + 1 u16 LE coefficients with
//   0xFFFF for EPS. The epsilon polynomial is degree 0xFFFFFFFF with no
//   coefficient bytes.
//
// Key and signature files:
//   TSIG v1 scheme=<1|2> d=<d> r=<r>
//   <label>=<polynomial text record>      (one per line, fixed order)
// Labels: private key X, Y, M; public key M; scheme-one signature P, A, B,
// N; scheme-two signature P, S2, S3, S4, N, E. Every line ends in '\n'.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropsig/error.hpp"
#include "tropsig/keygen.hpp"
#include "tropsig/params.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/scheme_one.hpp"
#include "tropsig/scheme_two.hpp"

namespace tropsig {

enum class ParseErrorKind {
  header,         // bad record or file header
  token,          // malformed coefficient or degree token
  token_count,    // coefficient count != degree + 1, or truncated bytes
  non_canonical,  // EPS leading coefficient
  out_of_range,   // value outside the representable window
  structure,      // missing/extra/misordered lines, parameter mismatch
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

std::string encode_poly_text(const TropicalPoly& p);
/// Strict inverse of encode_poly_text. Throws ParseError.
TropicalPoly decode_poly_text(std::string_view line);

inline constexpr std::uint16_t kCompactEps = 0xFFFF;
inline constexpr std::int64_t kCompactMax = 0xFFFE;

/// Throws UsageError if a finite coefficient is outside [0, 65534].
std::vector<std::uint8_t> encode_compact(const TropicalPoly& p);
/// Throws ParseError.
TropicalPoly decode_compact(std::span<const std::uint8_t> bytes);

/// Sum of compact record sizes of the components.
std::size_t compact_size(const SignatureV1& sig);
std::size_t compact_size(const SignatureV2& sig);
std::size_t compact_size(const PublicKey& pub);
/// X and Y only; M is recomputable.
std::size_t compact_private_size(const KeyPair& key);

std::string write_private_key(const KeyPair& key);
std::string write_public_key(const PublicKey& pub);
std::string write_signature(const SignatureV1& sig, const Params& params);
std::string write_signature(const SignatureV2& sig, const Params& params);

/// Parsed and validated (KeyPair::validate / PublicKey::validate); a
/// validation failure is reported as ParseErrorKind::structure.
KeyPair read_private_key(std::string_view text);
PublicKey read_public_key(std::string_view text);

template <class Sig>
struct SignatureFile {
  Params params;
  Sig sig;
};

/// Parsed only; the verifier judges the contents.
SignatureFile<SignatureV1> read_signature_v1(std::string_view text);
SignatureFile<SignatureV2> read_signature_v2(std::string_view text);

/// Scheme tag from a file header, without parsing the body.
Scheme peek_scheme(std::string_view text);

/// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace tropsig
