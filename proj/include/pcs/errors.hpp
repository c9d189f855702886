// Copyright 2026 The PCS Authors
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

namespace pcs {

/// Raised when measurement probabilities fail to sum to one, which means
/// the state is not physical or the basis is not unitary.
class NumericIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dense operation was requested beyond the configured qubit limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class EmptyAccumulatorError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed experiment configuration or CLI input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pcs
