// Copyright 2026 The Triality Authors
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

namespace triality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (matrix product, path/detector counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A state, overlap matrix or coefficient vector violates its invariants.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter lies outside its admissible range.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A Kraus set fails the completeness relation.
class ChannelError : public Error {
 public:
  using Error::Error;
};

}  // namespace triality
