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

#include "itc/native_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "itc/assembly.hpp"
#include "itc/matrix.hpp"

namespace itc {

namespace {

constexpr double kAngleTolerance = 1e-12;

bool row_has_ion(const NativeRow& row, Ion ion) {
  return std::any_of(row.ops.begin(), row.ops.end(),
                     [ion](const NativeOp& op) { return op.ions[0] == ion; });
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

Ion parse_ion(std::string_view token, std::size_t line) {
  Ion v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad ion index '" + std::string(token) + "'");
  }
  return v;
}

double parse_phi(std::string_view token, std::size_t line) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad phase '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

NativeTable to_table(const Circuit& native, bool parallel_1q) {
  NativeTable table;
  bool open_r_row = false;
  for (const auto& g : native.gates()) {
    switch (g.kind) {
      case GateKind::XX:
        if (std::abs(g.params[0] - kPi / 4) > kAngleTolerance) {
          throw CircuitError("non-native XX angle " + format_double(g.params[0]));
        }
        table.rows.push_back({{NativeOp::xx(g.qubits[0], g.qubits[1])}});
        open_r_row = false;
        break;
      case GateKind::RPHI: {
        if (std::abs(g.params[1] - kPi / 2) > kAngleTolerance) {
          throw CircuitError("non-native rotation angle " + format_double(g.params[1]));
        }
        const NativeOp op = NativeOp::rphi(g.qubits[0], canonical_angle(g.params[0]));
        if (parallel_1q && open_r_row && !row_has_ion(table.rows.back(), op.ions[0])) {
          table.rows.back().ops.push_back(op);
        } else {
          table.rows.push_back({{op}});
          open_r_row = true;
        }
        break;
      }
      case GateKind::MEASURE:
        table.measured.push_back(g.qubits[0]);
        break;
      default:
        throw CircuitError("non-native gate '" + std::string(mnemonic(g.kind)) + "'");
    }
  }
  return table;
}

CycleCounts cycle_counts(const NativeTable& table) {
  CycleCounts c;
  for (const auto& row : table.rows) {
    if (row.is_xx()) {
      ++c.xx_cycles;
    } else {
      ++c.r_cycles;
      c.r_ops += row.ops.size();
    }
  }
  return c;
}

Circuit serialize(const NativeTable& table, std::size_t n_ions) {
  Circuit c(n_ions);
  for (const auto& row : table.rows) {
    for (const auto& op : row.ops) {
      if (op.kind == NativeOp::Kind::XX) {
        c.append(gates::xx(kPi / 4, op.ions[0], op.ions[1]));
      } else {
        c.append(gates::rphi(op.phi, kPi / 2, op.ions[0]));
      }
    }
  }
  for (Ion ion : table.measured) c.append(gates::measure(ion));
  return c;
}

std::string format_table(const NativeTable& table) {
  std::ostringstream out;
  for (const auto& row : table.rows) {
    if (row.is_xx()) {
      out << "XX\t" << row.ops[0].ions[0] << ',' << row.ops[0].ions[1] << '\n';
      continue;
    }
    out << "R\t";
    for (std::size_t k = 0; k < row.ops.size(); ++k) {
      if (k) out << ',';
      out << row.ops[k].ions[0] << ':' << format_double(row.ops[k].phi);
    }
    out << '\n';
  }
  if (!table.measured.empty()) {
    out << "MEASURE\t";
    for (std::size_t k = 0; k < table.measured.size(); ++k) {
      if (k) out << ',';
      out << table.measured[k];
    }
    out << '\n';
  }
  return out.str();
}

NativeTable parse_table(std::string_view text) {
  NativeTable table;
  std::size_t line_no = 0;
  bool seen_measure = false;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError(line_no, "expected KIND<TAB>OPERANDS");
    if (seen_measure) throw ParseError(line_no, "MEASURE must be the last line");
    if (fields[0] == "XX") {
      const auto ions = split(fields[1], ',');
      if (ions.size() != 2) throw ParseError(line_no, "XX takes two ions");
      table.rows.push_back(
          {{NativeOp::xx(parse_ion(ions[0], line_no), parse_ion(ions[1], line_no))}});
    } else if (fields[0] == "R") {
      NativeRow row;
      for (std::string_view item : split(fields[1], ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected ION:PHI");
        const Ion ion = parse_ion(item.substr(0, colon), line_no);
        if (row_has_ion(row, ion)) throw ParseError(line_no, "ion repeated within a row");
        row.ops.push_back(NativeOp::rphi(ion, parse_phi(item.substr(colon + 1), line_no)));
      }
      table.rows.push_back(std::move(row));
    } else if (fields[0] == "MEASURE") {
      for (std::string_view item : split(fields[1], ',')) {
        table.measured.push_back(parse_ion(item, line_no));
      }
      seen_measure = true;
    } else {
      throw ParseError(line_no, "unknown row kind '" + std::string(fields[0]) + "'");
    }
  }
  return table;
}

}  // namespace itc
