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

#include "itc/assembly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace itc {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#') {
      ++j;
    }
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<double> parse_real(std::string_view token) {
  // std::from_chars rejects a leading '+'; accept it the way strtod does.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Circuit parse_asm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!circuit) {
      if (tokens[0] != "qreg") throw ParseError(line_no, "expected 'qreg N' header");
      if (tokens.size() != 2) throw ParseError(line_no, "'qreg' takes one integer");
      const auto n = parse_index(tokens[1]);
      if (!n || *n == 0) throw ParseError(line_no, "register size must be a positive integer");
      circuit.emplace(*n);
      continue;
    }
    if (tokens[0] == "qreg") throw ParseError(line_no, "duplicate 'qreg' header");

    const auto kind = gate_kind_from_mnemonic(tokens[0]);
    if (!kind) throw ParseError(line_no, "unknown mnemonic '" + std::string(tokens[0]) + "'");

    const std::size_t n_params = param_arity(*kind);
    const std::size_t n_qubits = qubit_arity(*kind);
    if (tokens.size() != 1 + n_params + n_qubits) {
      throw ParseError(line_no, std::string(tokens[0]) + " expects " +
                                    std::to_string(n_params) + " angle(s) and " +
                                    std::to_string(n_qubits) + " qubit(s)");
    }
    std::vector<double> params;
    for (std::size_t k = 0; k < n_params; ++k) {
      const auto v = parse_real(tokens[1 + k]);
      if (!v) throw ParseError(line_no, "bad angle '" + std::string(tokens[1 + k]) + "'");
      params.push_back(*v);
    }
    std::vector<Qubit> qubits;
    for (std::size_t k = 0; k < n_qubits; ++k) {
      const auto q = parse_index(tokens[1 + n_params + k]);
      if (!q) {
        throw ParseError(line_no,
                         "bad qubit index '" + std::string(tokens[1 + n_params + k]) + "'");
      }
      qubits.push_back(*q);
    }
    try {
      circuit->append(make_gate(*kind, std::move(qubits), std::move(params)));
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qreg N' header");
  return *std::move(circuit);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string print_asm(const Circuit& circuit) {
  std::ostringstream out;
  out << "qreg " << circuit.n_qubits() << '\n';
  for (const auto& g : circuit.gates()) {
    out << mnemonic(g.kind);
    for (double p : g.params) out << ' ' << format_double(p);
    for (Qubit q : g.qubits) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

}  // namespace itc
