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

#include "tropsig/verify_outcome.hpp"

namespace tropsig {

std::string gate_tag(Scheme scheme, Gate gate) {
  return std::string(scheme == Scheme::two ? "V'" : "V") + std::to_string(static_cast<int>(gate));
}

std::string VerifyOutcome::describe() const {
  if (accepted) return "accepted";
  return "rejected at " + gate_tag(scheme, failed_gate.value_or(Gate::g1)) + ": " + detail;
}

}  // namespace tropsig
