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

#include <cstdint>
#include <optional>
#include <string>

#include "tropsig/params.hpp"

namespace tropsig {

/// Verifiers treat signature components with an EPS coefficient or a
/// coefficient of magnitude above this as malformed (rejected at the
/// degree/format gate) so that no later gate can overflow.
inline constexpr std::int64_t kComponentMagnitude = std::int64_t{1} << 40;

/// Verification gate numbers. Scheme one uses 1-5, scheme two 1-6.
enum class Gate { g1 = 1, g2, g3, g4, g5, g6 };

/// "V3" for scheme one, "V'3" for scheme two.
std::string gate_tag(Scheme scheme, Gate gate);

struct VerifyOutcome {
  Scheme scheme = Scheme::one;
  bool accepted = false;
  std::optional<Gate> failed_gate;
  std::string detail;

  static VerifyOutcome accept(Scheme scheme) { return {scheme, true, std::nullopt, "accepted"}; }
  static VerifyOutcome reject(Scheme scheme, Gate gate, std::string detail) {
    return {scheme, false, gate, std::move(detail)};
  }

  /// One-line summary, e.g. "rejected at V5: A (x) B != P (x) P (x) M (x) N".
  std::string describe() const;
};

}  // namespace tropsig
