// Copyright 2026 The qaa-maxcut Authors
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

namespace qaa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad graph file, bad parameter).
class InputError : public Error {
   public:
    using Error::Error;
};

/// The requested instance exceeds a dense-simulation or enumeration budget.
class BudgetError : public Error {
   public:
    using Error::Error;
};

/// An iterative routine failed to converge or a numerical check failed.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// The instance has no spectral gap at an endpoint of the interpolation,
/// so no reference line for the intersection index can be placed.
class DegenerateGapError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

}  // namespace qaa
