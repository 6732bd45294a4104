// Copyright 2026 The Kronq Authors
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

namespace kronq {

/// Matrix or tuple dimensions do not fit the requested operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A domain parameter violates a mathematical constraint (odd quaternionic n,
/// non-prime metacyclic q, ...). The message names the violated relation.
class ConstraintError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input: circuit documents, matrix files, group specs.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kronq
