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

// Exact integer min-plus arithmetic on one-variable tropical polynomials.
//
// A polynomial is a dense vector of coefficients indexed by degree. The
// coefficient EPS (+infinity) marks an absent monomial; the integer 0 is a
// present monomial. Polynomials compare formally, coefficient by
// coefficient, never as piecewise-linear functions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tropsig {

/// An element of the min-plus semiring over Z: an integer or EPS = +inf.
///
/// Finite values are confined to [-kLimit, kLimit] so that the sum of any
/// two of them is exact in int64_t; arithmetic that would leave the window
/// throws ArithmeticRangeError.
class Coeff {
 public:
  static constexpr std::int64_t kLimit = (std::int64_t{1} << 62) - 1;

  constexpr Coeff() noexcept : value_(kEpsRaw) {}
  /// Throws ArithmeticRangeError if |v| > kLimit.
  constexpr explicit Coeff(std::int64_t v) : value_(checked(v)) {}

  static constexpr Coeff eps() noexcept { return Coeff(); }

  constexpr bool is_eps() const noexcept { return value_ == kEpsRaw; }
  constexpr bool is_finite() const noexcept { return value_ != kEpsRaw; }

  /// Integer value; throws UsageError on EPS.
  std::int64_t value() const;

  /// Raw storage, EPS included. Only meaningful after an is_eps() test.
  constexpr std::int64_t raw() const noexcept { return value_; }

  friend constexpr bool operator==(const Coeff&, const Coeff&) noexcept = default;

  /// Order of the semiring's underlying set: finite values ascending, EPS last.
  friend constexpr std::strong_ordering operator<=>(Coeff a, Coeff b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr std::int64_t kEpsRaw = INT64_MAX;

  static constexpr std::int64_t checked(std::int64_t v) {
    if (v > kLimit || v < -kLimit) throw_range(v);
    return v;
  }
  [[noreturn]] static void throw_range(std::int64_t v);

  std::int64_t value_;
};

/// x (+) y = min(x, y); EPS is neutral.
constexpr Coeff oplus(Coeff a, Coeff b) noexcept { return a < b ? a : b; }

/// x (x) y = x + y; EPS absorbs. Throws ArithmeticRangeError on overflow.
Coeff otimes(Coeff a, Coeff b);

/// A one-variable tropical polynomial in canonical form: the last stored
/// coefficient is finite, or nothing is stored (the epsilon polynomial).
class TropicalPoly {
 public:
  /// The epsilon polynomial.
  TropicalPoly() = default;

  /// Trailing EPS entries are dropped.
  explicit TropicalPoly(std::vector<Coeff> coeffs);

  /// All coefficients finite; coeffs[i] is the coefficient of x^i.
  static TropicalPoly from_ints(std::span<const std::int64_t> coeffs);
  static TropicalPoly from_ints(std::initializer_list<std::int64_t> coeffs);

  /// The degree-0 polynomial c.
  static TropicalPoly constant(std::int64_t c);

  bool is_eps() const noexcept { return coeffs_.empty(); }

  /// Throws NoDegreeError for the epsilon polynomial.
  std::size_t degree() const;

  /// Number of stored coefficients (degree + 1, or 0 for epsilon).
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^i; EPS past the end.
  Coeff operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Coeff::eps();
  }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

  bool all_finite() const noexcept;

  /// True when every coefficient is finite and lies in [lo, hi].
  bool coefficients_within(std::int64_t lo, std::int64_t hi) const noexcept;

  friend bool operator==(const TropicalPoly&, const TropicalPoly&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

/// Degree of p; throws NoDegreeError for the epsilon polynomial.
std::size_t degree(const TropicalPoly& p);

/// Coefficientwise minimum.
TropicalPoly oplus(const TropicalPoly& a, const TropicalPoly& b);

/// Min-plus convolution: (a (x) b)_m = min_{i+j=m} (a_i + b_j).
TropicalPoly otimes(const TropicalPoly& a, const TropicalPoly& b);

/// c (x) p: adds c to every finite coefficient of p.
TropicalPoly scalar_otimes(std::int64_t c, const TropicalPoly& p);

/// If r = c (x) s for one integer c, returns c.
///
/// Requires equal degrees and identical EPS positions. Two epsilon
/// polynomials are related by c = 0; an epsilon and a non-epsilon
/// polynomial never are.
std::optional<std::int64_t> constant_multiple_offset(const TropicalPoly& r, const TropicalPoly& s);

inline bool is_constant_multiple(const TropicalPoly& r, const TropicalPoly& s) {
  return constant_multiple_offset(r, s).has_value();
}

/// Residual quotient of c by a: q_j = max_i (c_{i+j} - a_i) over finite a_i,
/// for j = 0..deg(c)-deg(a). An EPS in c forces EPS in q.
///
/// q is the least polynomial with a (x) q >= c coefficientwise, so whenever
/// c = a (x) b for some b, a (x) q = c and q <= b.
///
/// Throws UsageError if a is epsilon, c is epsilon, or deg(c) < deg(a).
TropicalPoly residual_quotient(const TropicalPoly& c, const TropicalPoly& a);

}  // namespace tropsig
