#include "evosort/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "evosort/model.hpp"

namespace evosort {

const char* to_string(ParamsSource source) {
  switch (source) {
    case ParamsSource::Ga: return "ga";
    case ParamsSource::Symbolic: return "symbolic";
    case ParamsSource::Manual: return "manual";
  }
  return "?";
}

namespace {

template <typename Fn>
double time_best_of(std::size_t repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  if (repeats < 1) repeats = 1;
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

template <typename T>
void check_against_reference(const std::vector<T>& got,
                             const std::vector<T>& reference) {
  if (got == reference) return;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (got[i] != reference[i]) {
      throw std::runtime_error(
          "validation failed: first divergence at index " + std::to_string(i) +
          ": got " + std::to_string(got[i]) + ", expected " +
          std::to_string(reference[i]));
    }
  }
  throw std::runtime_error("validation failed: length mismatch");
}

template <typename T>
BenchResult bench_one(std::size_t n, const PipelineConfig& config,
                      WorkerPool& pool) {
  BenchResult result;
  result.spec.n = n;
  result.spec.element_width = static_cast<int>(sizeof(T) * 8);
  result.spec.seed = config.seed;
  result.params_source = config.mode;

  switch (config.mode) {
    case ParamsSource::Manual:
      result.params = validate(config.manual_params, config.bounds);
      break;
    case ParamsSource::Symbolic:
      result.params = symbolic_params(std::max<std::size_t>(n, 1), config.bounds);
      break;
    case ParamsSource::Ga: {
      GaConfig ga = config.ga;
      ga.rng_seed = Xoshiro256::derive_seed(config.seed, 0x6741);
      TuningOutcome outcome = run_ga_tuning<T>(n, config.bounds, ga, pool);
      result.params = outcome.best;
      if (config.keep_trace) result.trace = std::move(outcome.trace);
      break;
    }
  }

  const std::vector<T> data =
      generate_dataset<T>(result.spec, config.memory_cap_bytes);
  std::vector<T> reference = data;
  std::sort(reference.begin(), reference.end());

  if (n == 0) {
    // Degenerate case: trivially validated, speedups 1.0 by convention.
    result.path = decide(0, element_kind_of<T>(), result.params).chosen_path;
    result.baseline_times_s = {{"baseline_unstable", 0.0}, {"baseline_stable", 0.0}};
    result.speedup = {{"baseline_unstable", 1.0}, {"baseline_stable", 1.0}};
    result.validated = true;
    return result;
  }

  SortBuffer<T> buf(data.size());
  result.evosort_time_s = time_best_of(config.repeats, [&] {
    buf.primary = data;
    result.path = adaptive_partition_sort(buf, result.params, pool).chosen_path;
  });
  check_against_reference(buf.primary, reference);
  result.validated = true;

  std::vector<T> work;
  result.baseline_times_s["baseline_unstable"] = time_best_of(config.repeats, [&] {
    work = data;
    std::sort(work.begin(), work.end());
  });
  result.baseline_times_s["baseline_stable"] = time_best_of(config.repeats, [&] {
    work = data;
    std::stable_sort(work.begin(), work.end());
  });
  for (const auto& [name, t] : result.baseline_times_s) {
    result.speedup[name] = t / result.evosort_time_s;
  }
  return result;
}

nlohmann::ordered_json params_json(const TuningParams& p) {
  return nlohmann::ordered_json::parse(to_json(p));
}

}  // namespace

std::vector<BenchResult> run_pipeline(const std::vector<std::size_t>& sizes,
                                      const PipelineConfig& config) {
  if (sizes.empty()) throw std::invalid_argument("run_pipeline: sizes is empty");
  if (config.element_width != 32 && config.element_width != 64) {
    throw std::invalid_argument("element_width must be 32 or 64");
  }
  WorkerPool pool(config.workers);
  std::vector<BenchResult> results;
  results.reserve(sizes.size());
  for (const std::size_t n : sizes) {
    if (config.element_width == 32) {
      results.push_back(bench_one<std::int32_t>(n, config, pool));
    } else {
      results.push_back(bench_one<std::int64_t>(n, config, pool));
    }
  }
  return results;
}

std::string results_to_json(const std::vector<BenchResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["n"] = r.spec.n;
    j["element_width"] = r.spec.element_width;
    j["low"] = r.spec.low;
    j["high"] = r.spec.high;
    j["seed"] = r.spec.seed;
    j["params_source"] = to_string(r.params_source);
    j["params"] = params_json(r.params);
    j["path"] = to_string(r.path);
    j["validated"] = r.validated;
    j["evosort_time_s"] = r.evosort_time_s;
    j["baseline_times_s"] = r.baseline_times_s;
    j["speedup"] = r.speedup;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

void emit_report(const std::vector<BenchResult>& results,
                 const std::filesystem::path& out_dir) {
  for (const auto& r : results) {
    if (!r.validated) {
      throw std::logic_error("emit_report: refusing to write unvalidated result");
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);

  const auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    return out;
  };

  auto json_out = open(out_dir / "results.json");
  json_out << results_to_json(results) << '\n';

  auto csv = open(out_dir / "results.csv");
  csv << "n,element_width,seed,params_source,insertion_threshold,"
         "parallel_merge_threshold,algorithm,fallback_threshold,tile_size,"
         "path,evosort_time_s,baseline_unstable_s,baseline_stable_s,"
         "speedup_unstable,speedup_stable,validated\n";
  csv << std::setprecision(9);
  for (const auto& r : results) {
    csv << r.spec.n << ',' << r.spec.element_width << ',' << r.spec.seed << ','
        << to_string(r.params_source) << ',' << r.params.insertion_threshold
        << ',' << r.params.parallel_merge_threshold << ','
        << r.params.algorithm.code << ',' << r.params.fallback_threshold << ','
        << r.params.tile_size << ',' << to_string(r.path) << ','
        << r.evosort_time_s << ','
        << r.baseline_times_s.at("baseline_unstable") << ','
        << r.baseline_times_s.at("baseline_stable") << ','
        << r.speedup.at("baseline_unstable") << ','
        << r.speedup.at("baseline_stable") << ','
        << (r.validated ? "true" : "false") << '\n';
  }

  for (const auto& r : results) {
    if (r.trace.empty()) continue;
    auto trace = open(out_dir / ("trace_" + std::to_string(r.spec.n) + ".csv"));
    write_trace_csv(trace, r.trace);
  }
}

void print_table(const std::vector<BenchResult>& results, std::ostream& out) {
  out << std::left << std::setw(14) << "n" << std::setw(8) << "width"
      << std::setw(10) << "source" << std::setw(18) << "path" << std::setw(14)
      << "evosort_s" << std::setw(14) << "unstable_s" << std::setw(14)
      << "stable_s" << std::setw(12) << "speedup" << '\n';
  for (const auto& r : results) {
    out << std::left << std::setw(14) << r.spec.n << std::setw(8)
        << r.spec.element_width << std::setw(10) << to_string(r.params_source)
        << std::setw(18) << to_string(r.path) << std::setw(14) << std::fixed
        << std::setprecision(6) << r.evosort_time_s << std::setw(14)
        << r.baseline_times_s.at("baseline_unstable") << std::setw(14)
        << r.baseline_times_s.at("baseline_stable") << std::setw(12)
        << std::setprecision(2) << r.speedup.at("baseline_stable") << '\n';
    out.unsetf(std::ios::fixed);
  }
}

}  // namespace evosort
