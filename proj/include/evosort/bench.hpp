#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "evosort/dataset.hpp"
#include "evosort/dispatch.hpp"
#include "evosort/params.hpp"
#include "evosort/tuner.hpp"

namespace evosort {

enum class ParamsSource { Ga, Symbolic, Manual };

const char* to_string(ParamsSource source);

struct BenchResult {
  DatasetSpec spec;
  TuningParams params;
  ParamsSource params_source = ParamsSource::Symbolic;
  SortPath path = SortPath::HostStandardSort;
  double evosort_time_s = 0.0;
  std::map<std::string, double> baseline_times_s;  // name -> seconds
  std::map<std::string, double> speedup;           // S = T_baseline / T_evosort
  bool validated = false;
  std::vector<GenerationStats> trace;  // GA mode with tracing enabled
};

struct PipelineConfig {
  ParamsSource mode = ParamsSource::Symbolic;
  TuningParams manual_params;  // used when mode == Manual
  GaConfig ga;
  int element_width = 64;  // 32 or 64
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0 -> detected / EVOSORT_WORKERS
  std::size_t repeats = 1;
  std::size_t memory_cap_bytes = kDefaultMemoryCapBytes;
  bool keep_trace = false;
  GeneBounds bounds;
};

// Alg-1-shaped pipeline per size: obtain params, generate data, reference
// sort, timed EvoSort run, exact validation, baseline timings, speedups.
std::vector<BenchResult> run_pipeline(const std::vector<std::size_t>& sizes,
                                      const PipelineConfig& config);

// results.json (array of BenchResult) and results.csv; GA traces go to
// trace_<n>.csv next to them.
void emit_report(const std::vector<BenchResult>& results,
                 const std::filesystem::path& out_dir);

std::string results_to_json(const std::vector<BenchResult>& results);

void print_table(const std::vector<BenchResult>& results, std::ostream& out);

}  // namespace evosort
