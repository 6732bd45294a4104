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

// Versioned JSON circuit documents.
//
//   {"format_version": 1, "layout": [n_1, ...],
//    "gates": [{"kind": ..., "registers": {...}, "payload": {...}}, ...]}
//
// Register ranges are [first, count] pairs. Matrices are
// {"rows": r, "cols": c, "entries": ["re,im", ...]} in row-major order using
// the exact token format of format_complex.

#include <string>
#include <string_view>

#include "kronq/circuit.hpp"

namespace kronq {

inline constexpr int kCircuitFormatVersion = 1;

std::string serialize(const Circuit& c);

/// Throws FormatError on malformed documents, unknown gate kinds, and gates
/// that fail validation against the layout.
Circuit deserialize(std::string_view text);

}  // namespace kronq
