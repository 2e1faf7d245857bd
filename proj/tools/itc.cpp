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

// itc: compile circuits to R_phi(pi/2) + XX(pi/4) native tables.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "itc/assembly.hpp"
#include "itc/benchmarks.hpp"
#include "itc/compiler.hpp"
#include "itc/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCompileFailed = 2;
constexpr int kInvalid = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw itc::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw itc::Error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trapped-ion circuit compiler"};
  app.require_subcommand(1);

  std::string file, bench, connectivity = "linear", opts = "all", emit = "table", out;
  bool parallel = false, legacy = false, simulate = false;
  double tolerance = itc::kCompileTolerance;
  std::uint64_t seed = 0;

  auto* cmd = app.add_subcommand("compile", "Compile one circuit");
  auto* file_opt = cmd->add_option("file", file, "Assembly input (.iasm)");
  auto* bench_opt = cmd->add_option("--bench", bench, "Built-in benchmark name");
  file_opt->excludes(bench_opt);
  cmd->add_option("--connectivity", connectivity)->check(CLI::IsMember({"linear", "full"}));
  cmd->add_flag("--parallel-1q", parallel, "Pack single-qubit rotations into shared rows");
  cmd->add_flag("--legacy", legacy, "Emulate the legacy decomposition");
  cmd->add_option("--opts", opts, "all, none or a comma list");
  cmd->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", seed);
  cmd->add_option("--emit", emit)->check(CLI::IsMember({"table", "asm", "json"}));
  cmd->add_flag("--simulate", simulate, "Check measured marginals against the input");
  cmd->add_option("--out", out, "Write output here instead of stdout");

  std::string suite_out, suite_csv;
  std::uint64_t suite_seed = 0;
  auto* suite = app.add_subcommand("suite", "Run all benchmarks under all configurations");
  suite->add_option("--out", suite_out, "JSON report path");
  suite->add_option("--csv", suite_csv, "CSV reduction rows path");
  suite->add_option("--seed", suite_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*cmd) {
    if (file.empty() == bench.empty()) {
      std::cerr << "compile: give exactly one of FILE or --bench\n";
      return kUsage;
    }
    itc::CompileConfig cfg;
    try {
      cfg.connectivity = itc::connectivity_from_name(connectivity);
      cfg.opts = itc::parse_opt_list(opts);
    } catch (const itc::Error& e) {
      std::cerr << "compile: " << e.what() << "\n";
      return kUsage;
    }
    cfg.parallel_1q = parallel;
    cfg.legacy = legacy;
    cfg.tolerance = tolerance;
    cfg.seed = seed;

    std::optional<itc::CompileResult> result;
    try {
      const itc::Circuit circuit =
          bench.empty() ? itc::parse_asm(read_file(file)) : itc::build_benchmark(bench);
      result = itc::compile(circuit, cfg);
    } catch (const itc::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kCompileFailed;
    }

    std::optional<itc::Validation> validation;
    if (simulate) validation = itc::validate(*result);

    std::string text;
    if (emit == "json") {
      text = itc::compile_json(*result, cfg, validation ? &*validation : nullptr);
    } else {
      text = emit == "asm" ? itc::print_asm(result->native) : itc::format_table(result->table);
      if (validation) text += "# distribution " + itc::distribution_json(validation->actual) + "\n";
    }
    try {
      write_output(out, text);
    } catch (const itc::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (validation && !validation->ok) {
      std::cerr << "validation failed: tvd " << validation->tvd << "\n";
      return kInvalid;
    }
    return kOk;
  }

  itc::SuiteReport report;
  try {
    report = itc::run_suite(suite_seed);
  } catch (const itc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompileFailed;
  }
  std::cout << itc::report_text(report);
  try {
    if (!suite_out.empty()) write_output(suite_out, itc::report_json(report));
    if (!suite_csv.empty()) write_output(suite_csv, itc::report_csv(report));
  } catch (const itc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return report.all_valid() ? kOk : kInvalid;
}
