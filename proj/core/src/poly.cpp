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

#include "tropsig/poly.hpp"

#include <algorithm>
#include <string>

#include "tropsig/error.hpp"

namespace tropsig {

void Coeff::throw_range(std::int64_t v) {
  throw ArithmeticRangeError("coefficient " + std::to_string(v) +
                             " outside the exact window [-2^62+1, 2^62-1]");
}

std::int64_t Coeff::value() const {
  if (is_eps()) throw UsageError("value() of the EPS coefficient");
  return value_;
}

Coeff otimes(Coeff a, Coeff b) {
  if (a.is_eps() || b.is_eps()) return Coeff::eps();
  // |a|, |b| <= 2^62 - 1, so the int64 sum is exact.
  return Coeff(a.raw() + b.raw());
}

namespace {

// Builds a polynomial from raw storage where INT64_MAX denotes EPS.
TropicalPoly from_raw(const std::vector<std::int64_t>& raw) {
  std::vector<Coeff> out;
  out.reserve(raw.size());
  for (std::int64_t v : raw) out.push_back(v == INT64_MAX ? Coeff::eps() : Coeff(v));
  return TropicalPoly(std::move(out));
}

}  // namespace

TropicalPoly::TropicalPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_eps()) coeffs_.pop_back();
}

TropicalPoly TropicalPoly::from_ints(std::span<const std::int64_t> coeffs) {
  std::vector<Coeff> out;
  out.reserve(coeffs.size());
  for (std::int64_t v : coeffs) out.emplace_back(v);
  return TropicalPoly(std::move(out));
}

TropicalPoly TropicalPoly::from_ints(std::initializer_list<std::int64_t> coeffs) {
  return from_ints(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

TropicalPoly TropicalPoly::constant(std::int64_t c) { return TropicalPoly({Coeff(c)}); }

std::size_t TropicalPoly::degree() const {
  if (coeffs_.empty()) throw NoDegreeError();
  return coeffs_.size() - 1;
}

bool TropicalPoly::all_finite() const noexcept {
  return std::ranges::all_of(coeffs_, [](Coeff c) { return c.is_finite(); });
}

bool TropicalPoly::coefficients_within(std::int64_t lo, std::int64_t hi) const noexcept {
  return std::ranges::all_of(
      coeffs_, [lo, hi](Coeff c) { return c.is_finite() && c.raw() >= lo && c.raw() <= hi; });
}

std::size_t degree(const TropicalPoly& p) { return p.degree(); }

TropicalPoly oplus(const TropicalPoly& a, const TropicalPoly& b) {
  std::vector<Coeff> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = oplus(a[i], b[i]);
  return TropicalPoly(std::move(out));
}

TropicalPoly otimes(const TropicalPoly& a, const TropicalPoly& b) {
  if (a.is_eps() || b.is_eps()) return {};

  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<std::int64_t> acc(ac.size() + bc.size() - 1, INT64_MAX);

  if (b.all_finite()) {
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i].is_eps()) continue;
      const std::int64_t ai = ac[i].raw();
      std::int64_t* row = acc.data() + i;
      for (std::size_t j = 0; j < bc.size(); ++j) row[j] = std::min(row[j], ai + bc[j].raw());
    }
  } else {
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i].is_eps()) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) {
        if (bc[j].is_eps()) continue;
        acc[i + j] = std::min(acc[i + j], ac[i].raw() + bc[j].raw());
      }
    }
  }
  return from_raw(acc);
}

TropicalPoly scalar_otimes(std::int64_t c, const TropicalPoly& p) {
  const Coeff shift(c);
  std::vector<Coeff> out(p.coeffs().begin(), p.coeffs().end());
  for (Coeff& x : out) x = otimes(x, shift);
  return TropicalPoly(std::move(out));
}

std::optional<std::int64_t> constant_multiple_offset(const TropicalPoly& r, const TropicalPoly& s) {
  if (r.size() != s.size()) return std::nullopt;
  if (r.is_eps()) return 0;

  std::optional<std::int64_t> offset;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_eps() != s[i].is_eps()) return std::nullopt;
    if (r[i].is_eps()) continue;
    const std::int64_t diff = r[i].raw() - s[i].raw();
    if (offset && *offset != diff) return std::nullopt;
    offset = diff;
  }
  return offset;
}

TropicalPoly residual_quotient(const TropicalPoly& c, const TropicalPoly& a) {
  if (a.is_eps()) throw UsageError("residual_quotient: divisor is the epsilon polynomial");
  if (c.is_eps()) throw UsageError("residual_quotient: dividend is the epsilon polynomial");
  if (c.degree() < a.degree()) {
    throw UsageError("residual_quotient: deg(dividend) " + std::to_string(c.degree()) +
                     " < deg(divisor) " + std::to_string(a.degree()));
  }

  const std::size_t qlen = c.degree() - a.degree() + 1;
  std::vector<Coeff> q(qlen);
  for (std::size_t j = 0; j < qlen; ++j) {
    std::optional<std::int64_t> best;
    bool unbounded = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_eps()) continue;
      const Coeff ci = c[i + j];
      if (ci.is_eps()) {
        unbounded = true;
        break;
      }
      const std::int64_t diff = ci.raw() - a[i].raw();
      if (!best || diff > *best) best = diff;
    }
    // a has a finite leading coefficient, so best is set unless unbounded.
    q[j] = unbounded ? Coeff::eps() : Coeff(*best);
  }
  return TropicalPoly(std::move(q));
}

}  // namespace tropsig
