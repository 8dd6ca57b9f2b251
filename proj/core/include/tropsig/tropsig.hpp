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

#include "tropsig/bench.hpp"
#include "tropsig/codec.hpp"
#include "tropsig/cryptanalysis.hpp"
#include "tropsig/encoding.hpp"
#include "tropsig/error.hpp"
#include "tropsig/keygen.hpp"
#include "tropsig/params.hpp"
#include "tropsig/poly.hpp"
#include "tropsig/random.hpp"
#include "tropsig/scheme_one.hpp"
#include "tropsig/scheme_two.hpp"
#include "tropsig/verify_outcome.hpp"
