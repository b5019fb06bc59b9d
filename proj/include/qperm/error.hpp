// Copyright 2026 The qperm Authors
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

namespace qperm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-finite entries, bad parameters, length mismatches).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input parses as JSON but does not describe a valid matrix.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Problem size exceeds the cap of the requested algorithm or the simulator memory limit.
class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// Time step outside the finite-difference convergence bound.
class InvalidTimeStep : public Error {
 public:
  using Error::Error;
};

}  // namespace qperm
