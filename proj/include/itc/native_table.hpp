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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "itc/circuit.hpp"
#include "itc/routing.hpp"

namespace itc {

struct NativeOp {
  enum class Kind { Rphi, XX };

  Kind kind;
  std::vector<Ion> ions;  // one for Rphi, two for XX
  double phi = 0;         // Rphi only; XX is fixed at pi/4

  static NativeOp rphi(Ion ion, double phi) { return {Kind::Rphi, {ion}, phi}; }
  static NativeOp xx(Ion a, Ion b) { return {Kind::XX, {a, b}, 0}; }

  friend bool operator==(const NativeOp&, const NativeOp&) = default;
};

/// One cycle: a single XX, or Rphi ops on pairwise-distinct ions.
struct NativeRow {
  std::vector<NativeOp> ops;

  bool is_xx() const { return ops.size() == 1 && ops[0].kind == NativeOp::Kind::XX; }

  friend bool operator==(const NativeRow&, const NativeRow&) = default;
};

struct NativeTable {
  std::vector<NativeRow> rows;
  std::vector<Ion> measured;  // in circuit order

  friend bool operator==(const NativeTable&, const NativeTable&) = default;
};

/// Builds the table sent to the control software. Serial mode puts every op
/// in its own row. Parallel mode scans in order: an XX closes the open row
/// and takes a row of its own; an Rphi joins the open Rphi row unless its ion
/// is already there. Phases are reduced to (-pi, pi]. MEASURE only records
/// the ion. Throws CircuitError on any non-native gate.
NativeTable to_table(const Circuit& native, bool parallel_1q);

struct CycleCounts {
  std::size_t xx_cycles = 0;
  std::size_t r_cycles = 0;
  std::size_t r_ops = 0;

  friend bool operator==(const CycleCounts&, const CycleCounts&) = default;
};

CycleCounts cycle_counts(const NativeTable& table);

/// Rows replayed in order, ops within a row in listed order.
Circuit serialize(const NativeTable& table, std::size_t n_ions);

/// Tab-separated text, one row per line:
///
///     XX<TAB>0,1
///     R<TAB>0:1.5707963267948966,1:0
///     MEASURE<TAB>0,1
std::string format_table(const NativeTable& table);

/// Inverse of format_table. Throws ParseError.
NativeTable parse_table(std::string_view text);

}  // namespace itc
