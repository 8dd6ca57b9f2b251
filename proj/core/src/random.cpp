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

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <algorithm>
#include <bit>
#include <climits>
#include <memory>

#include "tropsig/error.hpp"

namespace tropsig {

namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const noexcept { EVP_CIPHER_CTX_free(ctx); }
};

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};

constexpr std::size_t kKeystreamChunk = 4096;

}  // namespace

std::uint64_t RandomSource::next_u64() {
  std::array<std::uint8_t, 8> buf{};
  fill(buf);
  std::uint64_t v = 0;
  for (std::uint8_t b : buf) v = (v << 8) | b;
  return v;
}

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw UsageError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == 0) return lo;

  const auto bits = static_cast<int>(std::bit_width(span));
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  const std::size_t nbytes = static_cast<std::size_t>((bits + 7) / 8);

  std::array<std::uint8_t, 8> buf{};
  for (;;) {
    fill(std::span(buf.data(), nbytes));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < nbytes; ++i) v = (v << 8) | buf[i];
    v &= mask;
    if (v <= span) return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v);
  }
}

void SystemRandom::fill(std::span<std::uint8_t> out) {
  while (!out.empty()) {
    const std::size_t n = std::min<std::size_t>(out.size(), INT_MAX);
    if (RAND_bytes(out.data(), static_cast<int>(n)) != 1) {
      throw InternalError("RAND_bytes failed");
    }
    out = out.subspan(n);
  }
}

SeededRandom::SeededRandom(std::span<const std::uint8_t> seed) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha3_256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), seed.data(), seed.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), key_.data(), &len) != 1 || len != key_.size()) {
    throw InternalError("SHA3-256 seed derivation failed");
  }
}

SeededRandom::SeededRandom(std::uint64_t seed)
    : SeededRandom([seed] {
        std::array<std::uint8_t, 8> bytes{};
        for (std::size_t i = 0; i < 8; ++i)
          bytes[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
        return bytes;
      }()) {}

void SeededRandom::refill() {
  // EVP_chacha20 takes a 16-byte IV: 32-bit little-endian block counter
  // followed by a 96-bit nonce. Each chunk restarts at its own counter.
  std::array<std::uint8_t, 16> iv{};
  const std::uint64_t counter = block_counter_;
  for (std::size_t i = 0; i < 4; ++i) iv[i] = static_cast<std::uint8_t>(counter >> (8 * i));
  for (std::size_t i = 0; i < 4; ++i)
    iv[4 + i] = static_cast<std::uint8_t>(counter >> (32 + 8 * i));

  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  buffer_.assign(kKeystreamChunk, 0);
  int outl = 0;
  if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, key_.data(), iv.data()) != 1 ||
      EVP_EncryptUpdate(ctx.get(), buffer_.data(), &outl, buffer_.data(),
                        static_cast<int>(buffer_.size())) != 1 ||
      static_cast<std::size_t>(outl) != buffer_.size()) {
    throw InternalError("ChaCha20 keystream generation failed");
  }
  block_counter_ += kKeystreamChunk / 64;
  offset_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  while (!out.empty()) {
    if (offset_ == buffer_.size()) refill();
    const std::size_t n = std::min(out.size(), buffer_.size() - offset_);
    std::copy_n(buffer_.begin() + static_cast<std::ptrdiff_t>(offset_), n, out.begin());
    offset_ += n;
    out = out.subspan(n);
  }
}

}  // namespace tropsig
