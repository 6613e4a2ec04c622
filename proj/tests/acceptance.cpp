// Acceptance suite: one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <vector>

#include <json.hpp>

#include "evosort/bench.hpp"
#include "evosort/dispatch.hpp"
#include "evosort/model.hpp"
#include "evosort/rng.hpp"
#include "evosort/sorters.hpp"
#include "evosort/tuner.hpp"

using namespace evosort;

namespace {

int failures = 0;

bool report(const std::string& name, bool ok, const std::string& detail = "",
            bool informational = false) {
  const char* tag = ok ? "[PASS]" : (informational ? "[FAIL (informational)]" : "[FAIL]");
  std::cout << tag << ' ' << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!ok && !informational) ++failures;
  return ok;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename T>
std::vector<T> make_pattern(std::size_t n, int pattern, Xoshiro256& rng) {
  std::vector<T> v(n);
  switch (pattern) {
    case 0:  // uniform in the benchmark range
      for (auto& x : v) x = static_cast<T>(rng.uniform_int(-1'000'000'000, 1'000'000'000));
      break;
    case 1:  // full-width values including INT_MIN/INT_MAX
      for (auto& x : v) {
        x = static_cast<T>(rng.uniform_int(std::numeric_limits<T>::min(),
                                           std::numeric_limits<T>::max()));
      }
      if (n >= 2) {
        v[rng.bounded(n)] = std::numeric_limits<T>::min();
        v[rng.bounded(n)] = std::numeric_limits<T>::max();
      }
      break;
    case 2:  // all equal
      std::fill(v.begin(), v.end(), static_cast<T>(rng.uniform_int(-5, 5)));
      break;
    case 3:  // sorted
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<T>(i) - static_cast<T>(n / 2);
      break;
    case 4:  // reverse sorted
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<T>(n - i);
      break;
  }
  return v;
}

template <typename T>
std::size_t oracle_check_all_paths(const std::vector<std::size_t>& sizes,
                                   int instances_per_cell, WorkerPool& pool,
                                   bool& all_ok) {
  Xoshiro256 rng(0xACCE55);
  std::size_t arrays = 0;
  TuningParams dispatch_params = params_from_json("[3075, 31291, 4, 99574, 1418]");
  for (const std::size_t n : sizes) {
    for (int pattern = 0; pattern < 5; ++pattern) {
      for (int rep = 0; rep < instances_per_cell; ++rep) {
        const auto input = make_pattern<T>(n, pattern, rng);
        ++arrays;
        auto expect = input;
        std::sort(expect.begin(), expect.end());

        std::vector<T> scratch(n);
        auto a = input;
        radix_sort_signed<T>(a, scratch, pool);
        all_ok &= (a == expect);

        auto b = input;
        refined_parallel_mergesort<T>(b, scratch, 64, 512, 37, pool);
        all_ok &= (b == expect);

        if (n <= 1000) {  // quadratic path kept within the runtime budget
          auto c = input;
          insertion_sort(std::span<T>(c));
          all_ok &= (c == expect);
        }

        SortBuffer<T> buf(input);
        dispatch_params.fallback_threshold =
            (rep % 2 == 0) ? 1024 : 99'574;  // exercise both dispatch regimes
        adaptive_partition_sort(buf, dispatch_params, pool);
        all_ok &= (buf.primary == expect);
      }
    }
  }
  return arrays;
}

void criterion_correctness() {
  const auto start = std::chrono::steady_clock::now();
  WorkerPool pool;
  bool ok = true;
  // 8 sizes x 5 patterns x 13 instances x two widths = 1040 arrays per width,
  // plus the 10^5 tier exercised with fewer instances.
  const std::vector<std::size_t> small_sizes{0, 1, 2, 17, 255, 256, 257, 1000};
  std::size_t arrays = 0;
  arrays += oracle_check_all_paths<std::int32_t>(small_sizes, 13, pool, ok);
  arrays += oracle_check_all_paths<std::int64_t>(small_sizes, 13, pool, ok);
  arrays += oracle_check_all_paths<std::int32_t>({100'000}, 2, pool, ok);
  arrays += oracle_check_all_paths<std::int64_t>({100'000}, 2, pool, ok);
  const double elapsed = seconds_since(start);
  report("correctness oracle suite",
         ok && arrays >= 1000 && elapsed < 60.0,
         std::to_string(arrays) + " arrays, " + std::to_string(elapsed) + " s");
}

template <typename T>
bool xor_properties_width() {
  Xoshiro256 rng(0xF11F);
  const T lo = std::numeric_limits<T>::min();
  const T hi = std::numeric_limits<T>::max();
  const std::vector<T> boundary{lo, static_cast<T>(lo + 1), static_cast<T>(-1), 0, 1,
                                static_cast<T>(hi - 1), hi};
  for (const T a : boundary) {
    if (sign_unflip<T>(sign_flip(a)) != a) return false;
    for (const T b : boundary) {
      if (a < b && !(sign_flip(a) < sign_flip(b))) return false;
    }
  }
  for (int iter = 0; iter < 1'000'000; ++iter) {
    const T a = static_cast<T>(rng.next());
    const T b = static_cast<T>(rng.next());
    if (sign_unflip<T>(sign_flip(a)) != a) return false;
    if (a < b && !(sign_flip(a) < sign_flip(b))) return false;
    if (b < a && !(sign_flip(b) < sign_flip(a))) return false;
  }
  return true;
}

void criterion_xor() {
  report("sign-mask XOR key properties (involution, order preservation)",
         xor_properties_width<std::int32_t>() && xor_properties_width<std::int64_t>());
}

void criterion_ga_properties() {
  const auto start = std::chrono::steady_clock::now();
  WorkerPool pool;
  const GeneBounds bounds;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GaConfig config;
    config.population_size = 12;
    config.generations = 10;
    config.elite_count = 1;
    config.rng_seed = seed;
    config.sample_fraction = 0.1;  // desk-scale sample of 10^4
    const auto outcome = run_ga_tuning<std::int64_t>(100'000, bounds, config, pool);
    for (std::size_t g = 0; g < outcome.trace.size(); ++g) {
      if (g > 0 && outcome.trace[g].best_time_s > outcome.trace[g - 1].best_time_s) {
        ok = false;
      }
      for (int gene = 0; gene < kGeneCount; ++gene) {
        const GeneRange range = gene_range(bounds, gene);
        const auto v = gene_get(outcome.trace[g].best_genes, gene);
        if (v < range.min || v > range.max) ok = false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  report("GA properties (monotone best, genes in bounds; 20 seeds x 10 generations)",
         ok && elapsed < 300.0, std::to_string(elapsed) + " s");
}

void criterion_ga_convergence() {
  const auto start = std::chrono::steady_clock::now();
  WorkerPool pool;
  int converged = 0;
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    GaConfig config;
    config.population_size = 8;
    config.generations = 3;
    config.rng_seed = seed;
    const auto outcome = run_ga_tuning<std::int64_t>(10'000'000, GeneBounds{}, config, pool);
    const double gen0 = outcome.trace[0].average_time_s;
    const double gen2 = outcome.trace[2].average_time_s;
    if (gen2 < 0.5 * gen0) ++converged;
  }
  report("GA convergence shape at 10^7 (gen-2 average < 50% of gen-0, >=4 of 5 seeds)",
         converged >= 4,
         std::to_string(converged) + "/5 seeds converged, " +
             std::to_string(seconds_since(start)) + " s");
}

void criterion_vertices() {
  const auto& m = builtin_symbolic_models();
  const Vertex ins = vertex(m.insertion);
  const Vertex par = vertex(m.parallel_merge);
  const Vertex np = vertex(m.fallback);
  const Vertex tile = vertex(m.tile);
  const bool ok = std::abs(ins.x - 6.60) < 0.02 && ins.is_minimum &&
                  std::abs(par.x - 8.54) < 0.02 && !par.is_minimum &&
                  std::abs(np.x - 9.14) < 0.02 && !np.is_minimum &&
                  std::abs(tile.x - 7.63) < 0.02 && tile.is_minimum;
  report("symbolic model vertices and curvature signs", ok);
}

void criterion_speedup() {
  const unsigned hw = std::thread::hardware_concurrency();
  DatasetSpec spec;
  spec.n = 10'000'000;
  spec.seed = 99;
  const auto data = generate_dataset<std::int64_t>(spec);
  const TuningParams params = symbolic_params(spec.n);
  WorkerPool pool;

  std::vector<double> speedups;
  for (int run = 0; run < 5; ++run) {
    SortBuffer<std::int64_t> buf(data.size());
    buf.primary = data;
    auto t0 = std::chrono::steady_clock::now();
    adaptive_partition_sort(buf, params, pool);
    const double evo = seconds_since(t0);

    auto baseline = data;
    t0 = std::chrono::steady_clock::now();
    std::stable_sort(baseline.begin(), baseline.end());
    const double stable = seconds_since(t0);
    speedups.push_back(stable / evo);
  }
  std::sort(speedups.begin(), speedups.end());
  const double median = speedups[2];
  const bool ok = median >= 1.5;
  std::string detail = "median speedup " + std::to_string(median) + "x vs stable baseline, " +
                       std::to_string(hw) + " hardware threads";
  if (hw < 4) detail += " (criterion stated for >=4 threads)";
  // Informational per the criterion: a miss triggers investigation, not rejection.
  report("desk-scale speedup at 10^7 int64 (>= 1.5x, median of 5)", ok, detail, true);
}

void criterion_dispatch_boundary() {
  TuningParams p = params_from_json("[3075, 31291, 4, 99574, 1418]");
  bool ok = true;
  const std::int64_t ks[] = {1024, 2048, 4096, 10'000, 20'000, 31'337,
                             50'000, 65'536, 99'574, 131'072};
  for (const std::int64_t k : ks) {
    p.fallback_threshold = k;
    ok &= decide(static_cast<std::size_t>(k - 1), ElementKind::Int64, p).chosen_path ==
          SortPath::HostStandardSort;
    ok &= decide(static_cast<std::size_t>(k), ElementKind::Int64, p).chosen_path !=
          SortPath::HostStandardSort;
  }
  report("dispatcher boundary exactness (10 values of k)", ok);
}

void criterion_determinism() {
  // Mirrors `evosort bench --mode symbolic --seed 42 --size 1000000`.
  PipelineConfig config;
  config.mode = ParamsSource::Symbolic;
  config.seed = 42;
  const auto strip = [](const std::vector<BenchResult>& results) {
    auto arr = nlohmann::json::parse(results_to_json(results));
    for (auto& entry : arr) {
      entry.erase("evosort_time_s");
      entry.erase("baseline_times_s");
      entry.erase("speedup");
    }
    return arr.dump();
  };
  const auto run1 = strip(run_pipeline({1'000'000}, config));
  const auto run2 = strip(run_pipeline({1'000'000}, config));
  report("bench determinism (byte-identical results JSON except timing fields)",
         run1 == run2);
}

}  // namespace

int main() {
  criterion_correctness();
  criterion_xor();
  criterion_ga_properties();
  criterion_ga_convergence();
  criterion_vertices();
  criterion_speedup();
  criterion_dispatch_boundary();
  criterion_determinism();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
