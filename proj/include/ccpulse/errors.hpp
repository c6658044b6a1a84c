// Copyright 2026 The ccpulse Authors
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

namespace ccpulse {

/// Non-finite or otherwise malformed numeric input.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pulse formula was evaluated outside its domain (arccos argument out of
/// range, arcsinc without a solution, degenerate target, ...). The message
/// names the failing formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An inner/outer pairing that does not yield a doubly robust sequence.
class RecipeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sequence violates a structural requirement (e.g. negative pulse angle).
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ccpulse
