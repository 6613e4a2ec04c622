// evosort CLI: GA tuning, symbolic parameters, file sorting, and the full
// benchmark pipeline.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "evosort/bench.hpp"
#include "evosort/dispatch.hpp"
#include "evosort/model.hpp"
#include "evosort/tuner.hpp"

namespace fs = std::filesystem;
using namespace evosort;

namespace {

TuningParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read params file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

// Raw little-endian 2's-complement integers, no header.
template <typename T>
std::vector<T> read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  in.seekg(0, std::ios::end);
  const auto bytes = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  if (bytes % sizeof(T) != 0) {
    throw std::runtime_error(path + ": size is not a multiple of element width");
  }
  std::vector<T> data(bytes / sizeof(T));
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(bytes));
  return data;
}

template <typename T>
void write_binary(const std::string& path, const std::vector<T>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(T)));
}

template <typename T>
int sort_file(const std::string& input, const std::string& output,
              const TuningParams& params, unsigned workers) {
  SortBuffer<T> buf(read_binary<T>(input));
  WorkerPool pool(workers);
  const DispatchDecision decision = adaptive_partition_sort(buf, params, pool);
  write_binary(output, buf.primary);
  std::cerr << "sorted " << buf.primary.size() << " elements via "
            << to_string(decision.chosen_path) << " -> " << output << '\n';
  return 0;
}

template <typename T>
int run_tune(std::size_t size, const GaConfig& ga, unsigned workers,
             const std::string& out_dir) {
  WorkerPool pool(workers);
  const TuningOutcome outcome = run_ga_tuning<T>(size, GeneBounds{}, ga, pool);
  fs::create_directories(out_dir);
  {
    std::ofstream out(fs::path(out_dir) / "params.json");
    out << to_json(outcome.best) << '\n';
  }
  {
    std::ofstream out(fs::path(out_dir) / "trace.csv");
    write_trace_csv(out, outcome.trace);
  }
  std::cout << "best individual: " << to_list_string(outcome.best) << '\n'
            << "best time: " << outcome.trace.back().best_time_s << " s\n"
            << "written: " << out_dir << "/params.json, " << out_dir
            << "/trace.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EvoSort: auto-tuned hybrid parallel sorting"};
  app.require_subcommand(1);

  std::size_t size = 10'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  int element_width = 64;
  std::string out_dir = "evosort_out";
  std::string params_file;
  std::size_t repeats = 1;

  GaConfig ga;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--workers", workers,
                    "worker count (default: EVOSORT_WORKERS or hardware)");
    cmd->add_option("--element-width", element_width, "element width in bits")
        ->check(CLI::IsMember({32, 64}));
  };

  auto* tune = app.add_subcommand("tune", "run the GA tuner, emit params JSON + trace CSV");
  tune->add_option("--size", size, "dataset size to tune for");
  tune->add_option("--generations", ga.generations, "GA generations");
  tune->add_option("--population", ga.population_size, "population size");
  tune->add_option("--repeats", ga.evaluation_repeats, "timing repeats per evaluation");
  tune->add_option("--sample-fraction", ga.sample_fraction,
                   "evaluate on this fraction of the dataset");
  tune->add_option("--out", out_dir, "output directory");
  add_common(tune);

  auto* params_cmd = app.add_subcommand("params", "print symbolic-model parameters for a size");
  params_cmd->add_option("--size", size, "dataset size")->required();

  auto* sort_cmd = app.add_subcommand("sort", "sort a raw little-endian binary file");
  std::string input, output;
  sort_cmd->add_option("input", input, "input file")->required();
  sort_cmd->add_option("-o,--output", output, "output file (default: <input>.sorted)");
  sort_cmd->add_option("--params", params_file, "params JSON file (default: symbolic model)");
  add_common(sort_cmd);

  auto* bench = app.add_subcommand("bench", "full pipeline: tune/params, sort, validate, report");
  std::vector<std::size_t> sizes;
  std::string mode = "symbolic";
  bool trace = false;
  bench->add_option("--size", sizes, "dataset sizes")->required();
  bench->add_option("--mode", mode, "parameter source")
      ->check(CLI::IsMember({"ga", "symbolic", "manual"}));
  bench->add_option("--params", params_file, "params JSON file for --mode manual");
  bench->add_option("--out", out_dir, "output directory");
  bench->add_flag("--trace", trace, "write GA generation traces");
  bench->add_option("--repeats", repeats, "timing repeats per measurement");
  bench->add_option("--generations", ga.generations, "GA generations (ga mode)");
  bench->add_option("--population", ga.population_size, "population size (ga mode)");
  bench->add_option("--sample-fraction", ga.sample_fraction,
                    "GA sample fraction (ga mode)");
  add_common(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tune->parsed()) {
      ga.rng_seed = seed;
      return element_width == 32 ? run_tune<std::int32_t>(size, ga, workers, out_dir)
                                 : run_tune<std::int64_t>(size, ga, workers, out_dir);
    }
    if (params_cmd->parsed()) {
      std::cout << to_json(symbolic_params(size)) << '\n';
      return 0;
    }
    if (sort_cmd->parsed()) {
      if (output.empty()) output = input + ".sorted";
      const auto file_bytes = fs::file_size(input);
      const std::size_t n = file_bytes / static_cast<std::size_t>(element_width / 8);
      const TuningParams params = params_file.empty()
                                      ? symbolic_params(std::max<std::size_t>(n, 1))
                                      : load_params_file(params_file);
      return element_width == 32 ? sort_file<std::int32_t>(input, output, params, workers)
                                 : sort_file<std::int64_t>(input, output, params, workers);
    }
    if (bench->parsed()) {
      PipelineConfig config;
      config.mode = mode == "ga"       ? ParamsSource::Ga
                    : mode == "manual" ? ParamsSource::Manual
                                       : ParamsSource::Symbolic;
      if (config.mode == ParamsSource::Manual) {
        if (params_file.empty()) {
          throw std::runtime_error("--mode manual requires --params <file>");
        }
        config.manual_params = load_params_file(params_file);
      }
      config.ga = ga;
      config.element_width = element_width;
      config.seed = seed;
      config.workers = workers;
      config.repeats = repeats;
      config.keep_trace = trace;
      const auto results = run_pipeline(sizes, config);
      print_table(results, std::cout);
      emit_report(results, out_dir);
      std::cout << "reports written to " << out_dir << "/\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
