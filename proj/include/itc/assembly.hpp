// Copyright 2026 The itc Authors
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

#include <string>
#include <string_view>

#include "itc/circuit.hpp"

namespace itc {

/// Parses the line-based assembly dialect:
///
///     qreg 3          # header, required before any instruction
///     h 0
///     rz 1.5707963 1  # angles in radians precede qubit operands
///     cnot 0 1
///     measure 0
///
/// Throws ParseError carrying the offending line number.
Circuit parse_asm(std::string_view text);

/// Inverse of parse_asm. Angles are printed as shortest round-trip decimals.
std::string print_asm(const Circuit& circuit);

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace itc
