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

#include <unistd.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

namespace tropsig {

namespace {

constexpr std::string_view kPolyTag = "TP1 d=";
constexpr std::string_view kFileTag = "TSIG";
constexpr std::string_view kFileVersion = "v1";
constexpr std::uint32_t kCompactEpsDegree = 0xFFFFFFFF;
// Bounds what a decoder will allocate for a hostile record.
constexpr std::uint64_t kMaxDecodedDegree = std::uint64_t{1} << 24;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Canonical non-negative decimal: "0" or [1-9][0-9]*.
std::uint64_t parse_unsigned(std::string_view tok, std::uint64_t max, const char* what) {
  if (tok.empty()) throw ParseError(ParseErrorKind::token, std::string("empty ") + what);
  for (char c : tok) {
    if (!is_digit(c)) throw ParseError(ParseErrorKind::token, std::string("bad ") + what);
  }
  if (tok.size() > 1 && tok.front() == '0') {
    throw ParseError(ParseErrorKind::token, std::string("leading zero in ") + what);
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range || (ec == std::errc() && v > max)) {
    throw ParseError(ParseErrorKind::out_of_range, std::string(what) + " too large");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseErrorKind::token, std::string("bad ") + what);
  }
  return v;
}

Coeff parse_coeff(std::string_view tok) {
  if (tok == "inf") return Coeff::eps();
  bool negative = false;
  if (!tok.empty() && tok.front() == '-') {
    negative = true;
    tok.remove_prefix(1);
    if (tok == "0") throw ParseError(ParseErrorKind::token, "negative zero");
  }
  const auto limit = static_cast<std::uint64_t>(Coeff::kLimit);
  const auto magnitude = static_cast<std::int64_t>(parse_unsigned(tok, limit, "coefficient"));
  return Coeff(negative ? -magnitude : magnitude);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw ParseError(ParseErrorKind::structure, "file must end with a newline");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string header_line(Scheme scheme, const Params& params) {
  std::ostringstream os;
  os << kFileTag << ' ' << kFileVersion << " scheme=" << static_cast<int>(scheme)
     << " d=" << params.d << " r=" << params.r << '\n';
  return os.str();
}

std::string_view expect_prefix(std::string_view s, std::string_view prefix, ParseErrorKind kind,
                               const char* what) {
  if (s.substr(0, prefix.size()) != prefix) throw ParseError(kind, what);
  return s.substr(prefix.size());
}

Params parse_header(std::string_view line) {
  std::array<std::string_view, 5> fields;
  std::size_t n = 0;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sp = line.find(' ', start);
    if (n == fields.size()) throw ParseError(ParseErrorKind::header, "too many header fields");
    fields[n++] = line.substr(start, sp == std::string_view::npos ? sp : sp - start);
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  if (n != fields.size() || fields[0] != kFileTag || fields[1] != kFileVersion) {
    throw ParseError(ParseErrorKind::header, "expected 'TSIG v1 scheme=<1|2> d=<d> r=<r>'");
  }

  Params params;
  const auto scheme_tok = expect_prefix(fields[2], "scheme=", ParseErrorKind::header, "scheme=");
  if (scheme_tok == "1") {
    params.scheme = Scheme::one;
  } else if (scheme_tok == "2") {
    params.scheme = Scheme::two;
  } else {
    throw ParseError(ParseErrorKind::header, "scheme must be 1 or 2");
  }
  params.d = parse_unsigned(expect_prefix(fields[3], "d=", ParseErrorKind::header, "d="),
                            kMaxDecodedDegree, "degree parameter");
  params.r = static_cast<std::int64_t>(
      parse_unsigned(expect_prefix(fields[4], "r=", ParseErrorKind::header, "r="),
                     static_cast<std::uint64_t>(Params::kMaxRange), "range parameter"));
  try {
    params.validate();
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::header, e.what());
  }
  return params;
}

struct ParsedFile {
  Params params;
  std::vector<TropicalPoly> polys;
};

ParsedFile parse_file(std::string_view text, std::span<const std::string_view> labels) {
  const auto lines = split_lines(text);
  if (lines.size() != labels.size() + 1) {
    throw ParseError(ParseErrorKind::structure,
                     "expected header plus " + std::to_string(labels.size()) + " records");
  }
  ParsedFile out{parse_header(lines[0]), {}};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string_view line = lines[i + 1];
    const std::string label = std::string(labels[i]) + "=";
    line =
        expect_prefix(line, label, ParseErrorKind::structure, ("expected record " + label).c_str());
    out.polys.push_back(decode_poly_text(line));
  }
  return out;
}

std::string write_file(Scheme scheme, const Params& params,
                       std::span<const std::string_view> labels,
                       std::initializer_list<const TropicalPoly*> polys) {
  std::string out = header_line(scheme, params);
  std::size_t i = 0;
  for (const TropicalPoly* p : polys) {
    out += labels[i++];
    out += '=';
    out += encode_poly_text(*p);
    out += '\n';
  }
  return out;
}

constexpr std::array<std::string_view, 3> kPrivateLabels{"X", "Y", "M"};
constexpr std::array<std::string_view, 1> kPublicLabels{"M"};
constexpr std::array<std::string_view, 4> kSigV1Labels{"P", "A", "B", "N"};
constexpr std::array<std::string_view, 6> kSigV2Labels{"P", "S2", "S3", "S4", "N", "E"};

}  // namespace

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::header:
      return "header error";
    case ParseErrorKind::token:
      return "token error";
    case ParseErrorKind::token_count:
      return "token-count error";
    case ParseErrorKind::non_canonical:
      return "non-canonical error";
    case ParseErrorKind::out_of_range:
      return "out-of-range error";
    case ParseErrorKind::structure:
      return "structure error";
  }
  return "parse error";
}

std::string encode_poly_text(const TropicalPoly& p) {
  if (p.is_eps()) return "TP1 d=- -";
  std::string out(kPolyTag);
  out += std::to_string(p.degree());
  out += ' ';
  bool first = true;
  for (Coeff c : p.coeffs()) {
    if (!first) out += ',';
    first = false;
    out += c.is_eps() ? std::string("inf") : std::to_string(c.raw());
  }
  return out;
}

TropicalPoly decode_poly_text(std::string_view line) {
  line = expect_prefix(line, kPolyTag, ParseErrorKind::header, "expected 'TP1 d=' prefix");
  const std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos) {
    throw ParseError(ParseErrorKind::header, "missing space before coefficient list");
  }
  const std::string_view degree_tok = line.substr(0, sp);
  const std::string_view list = line.substr(sp + 1);
  if (list.find(' ') != std::string_view::npos) {
    throw ParseError(ParseErrorKind::token, "whitespace inside coefficient list");
  }

  if (degree_tok == "-") {
    if (list != "-") throw ParseError(ParseErrorKind::token, "epsilon record must be 'd=- -'");
    return {};
  }
  const std::uint64_t degree = parse_unsigned(degree_tok, kMaxDecodedDegree, "degree");

  const auto commas = static_cast<std::uint64_t>(std::count(list.begin(), list.end(), ','));
  if (commas != degree) {
    throw ParseError(ParseErrorKind::token_count,
                     "degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                         " coefficients, got " + std::to_string(commas + 1));
  }

  std::vector<Coeff> coeffs;
  coeffs.reserve(degree + 1);
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = list.find(',', start);
    coeffs.push_back(
        parse_coeff(list.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.back().is_eps()) {
    throw ParseError(ParseErrorKind::non_canonical, "leading coefficient is inf");
  }
  return TropicalPoly(std::move(coeffs));
}

std::vector<std::uint8_t> encode_compact(const TropicalPoly& p) {
  std::vector<std::uint8_t> out;
  if (p.is_eps()) {
    put_u32(out, kCompactEpsDegree);
    return out;
  }
  if (p.degree() >= kCompactEpsDegree) throw UsageError("encode_compact: degree too large");
  out.reserve(4 + 2 * p.size());
  put_u32(out, static_cast<std::uint32_t>(p.degree()));
  for (Coeff c : p.coeffs()) {
    std::uint16_t v = kCompactEps;
    if (c.is_finite()) {
      if (c.raw() < 0 || c.raw() > kCompactMax) {
        throw UsageError("encode_compact: coefficient " + std::to_string(c.raw()) +
                         " outside [0, 65534]");
      }
      v = static_cast<std::uint16_t>(c.raw());
    }
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  return out;
}

TropicalPoly decode_compact(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw ParseError(ParseErrorKind::token_count, "truncated degree field");
  std::uint32_t degree = 0;
  for (int i = 3; i >= 0; --i) degree = (degree << 8) | bytes[static_cast<std::size_t>(i)];
  if (degree == kCompactEpsDegree) {
    if (bytes.size() != 4) throw ParseError(ParseErrorKind::token_count, "trailing bytes");
    return {};
  }
  const std::size_t expected = 4 + 2 * (std::size_t{degree} + 1);
  if (bytes.size() != expected) {
    throw ParseError(
        ParseErrorKind::token_count,
        "expected " + std::to_string(expected) + " bytes, got " + std::to_string(bytes.size()));
  }
  std::vector<Coeff> coeffs;
  coeffs.reserve(std::size_t{degree} + 1);
  for (std::size_t i = 4; i < bytes.size(); i += 2) {
    const auto v = static_cast<std::uint16_t>(bytes[i] | (bytes[i + 1] << 8));
    coeffs.push_back(v == kCompactEps ? Coeff::eps() : Coeff(v));
  }
  if (coeffs.back().is_eps()) {
    throw ParseError(ParseErrorKind::non_canonical, "leading coefficient is EPS");
  }
  return TropicalPoly(std::move(coeffs));
}

std::size_t compact_size(const SignatureV1& sig) {
  std::size_t n = 0;
  for (const auto* p : {&sig.P, &sig.A, &sig.B, &sig.N}) n += encode_compact(*p).size();
  return n;
}

std::size_t compact_size(const SignatureV2& sig) {
  std::size_t n = 0;
  for (const auto* p : {&sig.P, &sig.S2, &sig.S3, &sig.S4, &sig.N, &sig.E}) {
    n += encode_compact(*p).size();
  }
  return n;
}

std::size_t compact_size(const PublicKey& pub) { return encode_compact(pub.M).size(); }

std::size_t compact_private_size(const KeyPair& key) {
  return encode_compact(key.X).size() + encode_compact(key.Y).size();
}

std::string write_private_key(const KeyPair& key) {
  return write_file(key.params.scheme, key.params, kPrivateLabels, {&key.X, &key.Y, &key.M});
}

std::string write_public_key(const PublicKey& pub) {
  return write_file(pub.params.scheme, pub.params, kPublicLabels, {&pub.M});
}

std::string write_signature(const SignatureV1& sig, const Params& params) {
  return write_file(Scheme::one, params, kSigV1Labels, {&sig.P, &sig.A, &sig.B, &sig.N});
}

std::string write_signature(const SignatureV2& sig, const Params& params) {
  return write_file(Scheme::two, params, kSigV2Labels,
                    {&sig.P, &sig.S2, &sig.S3, &sig.S4, &sig.N, &sig.E});
}

KeyPair read_private_key(std::string_view text) {
  auto file = parse_file(text, kPrivateLabels);
  KeyPair key{file.params, std::move(file.polys[0]), std::move(file.polys[1]),
              std::move(file.polys[2])};
  try {
    key.validate();
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::structure, std::string("invalid private key: ") + e.what());
  }
  return key;
}

PublicKey read_public_key(std::string_view text) {
  auto file = parse_file(text, kPublicLabels);
  PublicKey pub{file.params, std::move(file.polys[0])};
  try {
    pub.validate();
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::structure, std::string("invalid public key: ") + e.what());
  }
  return pub;
}

SignatureFile<SignatureV1> read_signature_v1(std::string_view text) {
  auto file = parse_file(text, kSigV1Labels);
  if (file.params.scheme != Scheme::one) {
    throw ParseError(ParseErrorKind::structure, "not a scheme-one signature");
  }
  auto& p = file.polys;
  return {file.params, {std::move(p[0]), std::move(p[1]), std::move(p[2]), std::move(p[3])}};
}

SignatureFile<SignatureV2> read_signature_v2(std::string_view text) {
  auto file = parse_file(text, kSigV2Labels);
  if (file.params.scheme != Scheme::two) {
    throw ParseError(ParseErrorKind::structure, "not a scheme-two signature");
  }
  auto& p = file.polys;
  return {file.params,
          {std::move(p[0]), std::move(p[1]), std::move(p[2]), std::move(p[3]), std::move(p[4]),
           std::move(p[5])}};
}

Scheme peek_scheme(std::string_view text) {
  const std::size_t nl = text.find('\n');
  return parse_header(text.substr(0, nl)).scheme;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace tropsig
