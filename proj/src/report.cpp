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

#include "itc/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "itc/benchmarks.hpp"

namespace itc {
namespace {

using nlohmann::json;

CompileConfig make(bool legacy, OptFlags opts, Connectivity conn = Connectivity::Linear,
                   bool parallel = false) {
  CompileConfig c;
  c.legacy = legacy;
  c.opts = opts;
  c.connectivity = conn;
  c.parallel_1q = parallel;
  return c;
}

OptFlags only(bool OptFlags::*member) {
  OptFlags f = OptFlags::none();
  f.*member = true;
  return f;
}

double ratio(std::size_t base, std::size_t opt) {
  return opt == 0 ? 0.0 : static_cast<double>(base) / static_cast<double>(opt);
}

json stats_json(const CompileStats& s) {
  return {{"input_gates", s.input_gates},       {"routed_gates", s.routed_gates},
          {"lowered_gates", s.lowered_gates},   {"swaps", s.swaps},
          {"xx_count", s.xx_count},             {"r_ops", s.r_ops},
          {"r_cycles", s.r_cycles},             {"xx_cycles", s.xx_cycles},
          {"runs", s.runs},                     {"identity_skips", s.identity_skips},
          {"fallbacks", s.fallbacks},           {"discarded_runs", s.discarded_runs},
          {"max_residual", s.max_residual}};
}

json config_json(const CompileConfig& c) {
  return {{"connectivity", connectivity_name(c.connectivity)},
          {"parallel_1q", c.parallel_1q},
          {"legacy", c.legacy},
          {"opts", opt_list_string(c.opts)},
          {"tolerance", c.tolerance},
          {"seed", c.seed}};
}

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

json dist_json(const MeasDistribution& d) {
  json j = json::object();
  for (const auto& [k, p] : d) j[k] = round12(p);
  return j;
}

}  // namespace

const std::vector<SuiteConfig>& suite_configs() {
  static const std::vector<SuiteConfig> configs = [] {
    OptFlags rz_opt = OptFlags::none();
    rz_opt.up_to_rz = true;
    rz_opt.skip_identity = true;
    OptFlags rz_both = rz_opt;
    rz_both.from_rz = true;
    const auto all = OptFlags::all();
    return std::vector<SuiteConfig>{
        {"old-no-opt", make(true, OptFlags::none())},
        {"old-rz-opt", make(true, rz_opt)},
        {"old-rz-both", make(true, rz_both)},
        {"ours-no-opt", make(false, OptFlags::none())},
        {"ours-only-rx", make(false, only(&OptFlags::rx_commute))},
        {"ours-only-up-to-rz", make(false, only(&OptFlags::up_to_rz))},
        {"ours-only-from-rz", make(false, only(&OptFlags::from_rz))},
        {"ours-only-identity", make(false, only(&OptFlags::skip_identity))},
        {"ours-only-trailing", make(false, only(&OptFlags::discard_trailing))},
        {"ours-all", make(false, all)},
        {"ours-all-parallel", make(false, all, Connectivity::Linear, true)},
        {"ours-all-full", make(false, all, Connectivity::Full)},
        {"ours-all-full-parallel", make(false, all, Connectivity::Full, true)},
    };
  }();
  return configs;
}

const SuiteRun& SuiteReport::run(std::string_view benchmark, std::string_view config) const {
  for (const auto& r : runs) {
    if (r.benchmark == benchmark && r.config == config) return r;
  }
  throw Error("no run for " + std::string(benchmark) + "/" + std::string(config));
}

const Reduction& SuiteReport::reduction(std::string_view benchmark,
                                        std::string_view metric) const {
  for (const auto& r : reductions) {
    if (r.benchmark == benchmark && r.metric == metric) return r;
  }
  throw Error("no reduction " + std::string(metric) + " for " + std::string(benchmark));
}

double SuiteReport::mean_ratio(std::string_view metric) const {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : reductions) {
    if (r.metric != metric) continue;
    sum += r.ratio;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

bool SuiteReport::all_valid() const {
  for (const auto& r : runs) {
    if (!r.valid) return false;
  }
  return true;
}

SuiteReport run_suite(std::uint64_t seed) {
  SuiteReport report;
  report.seed = seed;
  for (std::string_view bench : benchmark_names()) {
    const Circuit circuit = build_benchmark(bench);
    for (const auto& [name, base] : suite_configs()) {
      CompileConfig cfg = base;
      cfg.seed = seed;
      const CompileResult result = compile(circuit, cfg);
      const Validation v = validate(result);
      report.runs.push_back({std::string(bench), name, result.stats, v.tvd, v.ok});
    }
    auto add = [&](std::string metric, std::string_view from, std::string_view to,
                   std::size_t CompileStats::*field) {
      const auto b = report.run(bench, from).stats.*field;
      const auto o = report.run(bench, to).stats.*field;
      report.reductions.push_back({std::string(bench), std::move(metric), std::string(from),
                                   std::string(to), b, o, ratio(b, o)});
    };
    add("r_ops", kBaselineConfig, kReferenceConfig, &CompileStats::r_ops);
    add("xx_count", kReferenceConfig, "ours-all-full", &CompileStats::xx_count);
    add("r_cycles_parallel", kReferenceConfig, "ours-all-parallel", &CompileStats::r_cycles);
    add("r_cycles_full", kReferenceConfig, "ours-all-full", &CompileStats::r_cycles);
    add("r_cycles_full_parallel", kReferenceConfig, "ours-all-full-parallel",
        &CompileStats::r_cycles);
  }
  return report;
}

std::string report_json(const SuiteReport& report) {
  json runs = json::array();
  for (const auto& r : report.runs) {
    json j = stats_json(r.stats);
    j["benchmark"] = r.benchmark;
    j["config"] = r.config;
    j["tvd"] = r.tvd;
    j["valid"] = r.valid;
    runs.push_back(std::move(j));
  }
  json reductions = json::array();
  for (const auto& r : report.reductions) {
    reductions.push_back({{"benchmark", r.benchmark},
                          {"metric", r.metric},
                          {"baseline_config", r.baseline_config},
                          {"optimized_config", r.optimized_config},
                          {"baseline", r.baseline},
                          {"optimized", r.optimized},
                          {"ratio", r.ratio}});
  }
  json configs = json::object();
  for (const auto& [name, cfg] : suite_configs()) configs[name] = config_json(cfg);
  json mean = json::object();
  for (const auto* m : {"r_ops", "xx_count", "r_cycles_parallel", "r_cycles_full",
                        "r_cycles_full_parallel"}) {
    mean[m] = report.mean_ratio(m);
  }
  json out = {{"seed", report.seed},
              {"configs", configs},
              {"runs", runs},
              {"reductions", reductions},
              {"mean_reduction", mean},
              {"all_valid", report.all_valid()}};
  return out.dump(2) + "\n";
}

std::string report_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "benchmark,metric,baseline_config,optimized_config,baseline,optimized,ratio\n";
  for (const auto& r : report.reductions) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r.ratio);
    os << r.benchmark << ',' << r.metric << ',' << r.baseline_config << ','
       << r.optimized_config << ',' << r.baseline << ',' << r.optimized << ',' << buf << '\n';
  }
  return os.str();
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "benchmark" << std::setw(24) << "config" << std::right
     << std::setw(6) << "xx" << std::setw(7) << "r_ops" << std::setw(9) << "r_cycles"
     << std::setw(7) << "swaps" << std::setw(12) << "tvd" << "\n";
  for (const auto& r : report.runs) {
    char tv[32];
    std::snprintf(tv, sizeof tv, "%.2e", r.tvd);
    os << std::left << std::setw(12) << r.benchmark << std::setw(24) << r.config << std::right
       << std::setw(6) << r.stats.xx_count << std::setw(7) << r.stats.r_ops << std::setw(9)
       << r.stats.r_cycles << std::setw(7) << r.stats.swaps << std::setw(12) << tv
       << (r.valid ? "" : "  INVALID") << "\n";
  }
  os << "\n"
     << std::left << std::setw(12) << "benchmark" << std::setw(24) << "metric" << std::right
     << std::setw(9) << "baseline" << std::setw(10) << "optimized" << std::setw(8) << "ratio"
     << "\n";
  for (const auto& r : report.reductions) {
    char rt[32];
    std::snprintf(rt, sizeof rt, "%.2f", r.ratio);
    os << std::left << std::setw(12) << r.benchmark << std::setw(24) << r.metric << std::right
       << std::setw(9) << r.baseline << std::setw(10) << r.optimized << std::setw(8) << rt
       << "\n";
  }
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.2f", report.mean_ratio("r_ops"));
  os << "\nmean r_ops reduction vs " << kBaselineConfig << ": " << mean << "\n";
  return os.str();
}

std::string compile_json(const CompileResult& result, const CompileConfig& config,
                         const Validation* validation) {
  json rows = json::array();
  for (const auto& row : result.table.rows) {
    json ops = json::array();
    for (const auto& op : row.ops) {
      if (op.kind == NativeOp::Kind::XX) {
        ops.push_back({{"gate", "xx"}, {"ions", op.ions}});
      } else {
        ops.push_back({{"gate", "r"}, {"ions", op.ions}, {"phi", op.phi}});
      }
    }
    rows.push_back(std::move(ops));
  }
  json out = {{"config", config_json(config)},
              {"stats", stats_json(result.stats)},
              {"rows", rows},
              {"measured_ions", result.table.measured},
              {"final_placement", result.routed.final_placement.logical_to_physical()}};
  if (validation != nullptr) {
    out["validation"] = {{"expected", dist_json(validation->expected)},
                         {"actual", dist_json(validation->actual)},
                         {"tvd", validation->tvd},
                         {"ok", validation->ok}};
  }
  return out.dump(2) + "\n";
}

}  // namespace itc
