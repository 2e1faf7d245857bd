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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "itc/compiler.hpp"

namespace itc {

struct SuiteConfig {
  std::string name;
  CompileConfig config;
};

/// Fixed configuration list swept by the suite, in report order.
const std::vector<SuiteConfig>& suite_configs();

/// Legacy reference for R_phi reductions.
inline constexpr std::string_view kBaselineConfig = "old-rz-opt";
/// Linear, serial, all optimizations.
inline constexpr std::string_view kReferenceConfig = "ours-all";

struct SuiteRun {
  std::string benchmark;
  std::string config;
  CompileStats stats;
  double tvd = 0;
  bool valid = true;
};

struct Reduction {
  std::string benchmark;
  std::string metric;
  std::string baseline_config;
  std::string optimized_config;
  std::size_t baseline = 0;
  std::size_t optimized = 0;
  double ratio = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<SuiteRun> runs;
  std::vector<Reduction> reductions;

  /// Throws Error if the pair was not run.
  const SuiteRun& run(std::string_view benchmark, std::string_view config) const;
  const Reduction& reduction(std::string_view benchmark, std::string_view metric) const;
  double mean_ratio(std::string_view metric) const;
  bool all_valid() const;
};

/// Compiles and validates every benchmark under every suite configuration.
SuiteReport run_suite(std::uint64_t seed = 0);

/// Pretty-printed, keys sorted, no timing data.
std::string report_json(const SuiteReport& report);
/// benchmark,metric,baseline_config,optimized_config,baseline,optimized,ratio
std::string report_csv(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

/// JSON for a single compile. `validation` may be null.
std::string compile_json(const CompileResult& result, const CompileConfig& config,
                         const Validation* validation);

}  // namespace itc
