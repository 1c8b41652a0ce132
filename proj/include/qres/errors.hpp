// Copyright 2026 The qres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qres {

/// Bad input or contract violation detected before any numerics run.
/// Maps to CLI exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure discovered mid-computation: singular operator,
/// ill-conditioned metric, non-convergence. Maps to CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qres
