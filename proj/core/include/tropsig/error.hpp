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

#include <stdexcept>
#include <string>

namespace tropsig {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient sum left the representable window. Never wraps.
class ArithmeticRangeError : public Error {
 public:
  using Error::Error;
};

/// degree() was asked of the epsilon polynomial.
class NoDegreeError : public Error {
 public:
  NoDegreeError() : Error("the epsilon polynomial has no degree") {}
};

/// A caller broke an operation's precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside what the implementation supports (e.g. r != 2^b - 1).
class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search would exceed its configured work limit.
class WorkLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Something that must not happen did (e.g. signer resampling gave up).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropsig
