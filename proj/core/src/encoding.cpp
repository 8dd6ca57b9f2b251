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

#include <openssl/evp.h>

#include <bit>
#include <memory>

#include "tropsig/error.hpp"

namespace tropsig {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};

}  // namespace

std::string HashDigest::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * kBytes);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

HashDigest hash_message(std::span<const std::uint8_t> message) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  HashDigest out;
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha3_512(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), message.data(), message.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.bytes.data(), &len) != 1 || len != HashDigest::kBytes) {
    throw InternalError("SHA3-512 computation failed");
  }
  return out;
}

HashDigest hash_message(std::string_view message) { return hash_message(message_bytes(message)); }

unsigned bits_per_coefficient(std::int64_t r) {
  if (r < 1 || r > (std::int64_t{1} << 62) - 1) {
    throw UnsupportedParameterError("coefficient range r must be 2^b - 1 with 1 <= b <= 62, got " +
                                    std::to_string(r));
  }
  const auto range = static_cast<std::uint64_t>(r) + 1;
  if (!std::has_single_bit(range)) {
    throw UnsupportedParameterError("coefficient range r must be 2^b - 1, got " +
                                    std::to_string(r));
  }
  return static_cast<unsigned>(std::countr_zero(range));
}

std::size_t digest_copies(std::size_t d, std::int64_t r) {
  const std::size_t needed = (d + 1) * bits_per_coefficient(r);
  constexpr std::size_t kDigestBits = HashDigest::kBytes * 8;
  return (needed + kDigestBits - 1) / kDigestBits;
}

TropicalPoly digest_to_poly(const HashDigest& digest, std::size_t d, std::int64_t r) {
  const unsigned b = bits_per_coefficient(r);
  constexpr std::size_t kDigestBits = HashDigest::kBytes * 8;

  // Position in the concatenation maps to digest bit (pos mod 512).
  std::vector<Coeff> coeffs;
  coeffs.reserve(d + 1);
  std::size_t pos = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    std::int64_t v = 0;
    for (unsigned k = 0; k < b; ++k, ++pos) {
      v = (v << 1) | (digest.bit(pos % kDigestBits) ? 1 : 0);
    }
    coeffs.emplace_back(v);
  }
  return TropicalPoly(std::move(coeffs));
}

TropicalPoly poly_square_to_2d(const TropicalPoly& p) {
  if (p.is_eps()) throw UsageError("poly_square_to_2d: epsilon polynomial");
  return otimes(p, p);
}

TropicalPoly message_poly(std::span<const std::uint8_t> message, const Params& params) {
  TropicalPoly p = digest_to_poly(hash_message(message), params.d, params.r);
  if (params.scheme == Scheme::two && params.hash_degree == HashDegree::two_d) {
    return poly_square_to_2d(p);
  }
  return p;
}

}  // namespace tropsig
