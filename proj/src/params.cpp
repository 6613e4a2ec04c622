#include "evosort/params.hpp"

#include <json.hpp>

#include <sstream>

namespace evosort {

namespace {

void check_range(std::int64_t value, const GeneRange& range, const char* name) {
  if (value < range.min) {
    throw ValidationError(std::string(name) + " below minimum " +
                          std::to_string(range.min));
  }
  if (value > range.max) {
    throw ValidationError(std::string(name) + " above maximum " +
                          std::to_string(range.max));
  }
}

}  // namespace

TuningParams validate(const TuningParams& params, const GeneBounds& bounds) {
  check_range(params.insertion_threshold, bounds.insertion_threshold,
              "insertion_threshold");
  check_range(params.parallel_merge_threshold, bounds.parallel_merge_threshold,
              "parallel_merge_threshold");
  if (!bounds.code_allowed(params.algorithm.code)) {
    throw ValidationError("algorithm code " +
                          std::to_string(params.algorithm.code) +
                          " outside allowed set [" +
                          std::to_string(bounds.allowed_codes_min) + ", " +
                          std::to_string(bounds.allowed_codes_max) + "]");
  }
  check_range(params.fallback_threshold, bounds.fallback_threshold,
              "fallback_threshold");
  check_range(params.tile_size, bounds.tile_size, "tile_size");
  return params;
}

std::int64_t gene_get(const TuningParams& params, int index) {
  switch (index) {
    case 0: return params.insertion_threshold;
    case 1: return params.parallel_merge_threshold;
    case 2: return params.algorithm.code;
    case 3: return params.fallback_threshold;
    case 4: return params.tile_size;
    default: throw std::out_of_range("gene index");
  }
}

void gene_set(TuningParams& params, int index, std::int64_t value) {
  switch (index) {
    case 0: params.insertion_threshold = value; break;
    case 1: params.parallel_merge_threshold = value; break;
    case 2: params.algorithm.code = static_cast<int>(value); break;
    case 3: params.fallback_threshold = value; break;
    case 4: params.tile_size = value; break;
    default: throw std::out_of_range("gene index");
  }
}

GeneRange gene_range(const GeneBounds& bounds, int index) {
  switch (index) {
    case 0: return bounds.insertion_threshold;
    case 1: return bounds.parallel_merge_threshold;
    case 2: return {bounds.allowed_codes_min, bounds.allowed_codes_max};
    case 3: return bounds.fallback_threshold;
    case 4: return bounds.tile_size;
    default: throw std::out_of_range("gene index");
  }
}

std::string to_json(const TuningParams& params) {
  nlohmann::ordered_json j;
  j["insertion_threshold"] = params.insertion_threshold;
  j["parallel_merge_threshold"] = params.parallel_merge_threshold;
  j["algorithm"] = params.algorithm.code;
  j["fallback_threshold"] = params.fallback_threshold;
  j["tile_size"] = params.tile_size;
  return j.dump();
}

TuningParams params_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  TuningParams p;
  if (j.is_array()) {
    if (j.size() != kGeneCount) {
      throw ValidationError("positional params list must have 5 entries");
    }
    for (int i = 0; i < kGeneCount; ++i) {
      gene_set(p, i, j[static_cast<std::size_t>(i)].get<std::int64_t>());
    }
    return p;
  }
  p.insertion_threshold = j.at("insertion_threshold").get<std::int64_t>();
  p.parallel_merge_threshold = j.at("parallel_merge_threshold").get<std::int64_t>();
  p.algorithm.code = j.at("algorithm").get<int>();
  p.fallback_threshold = j.at("fallback_threshold").get<std::int64_t>();
  p.tile_size = j.at("tile_size").get<std::int64_t>();
  return p;
}

std::string to_list_string(const TuningParams& params) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < kGeneCount; ++i) {
    if (i) out << ", ";
    out << gene_get(params, i);
  }
  out << ']';
  return out.str();
}

}  // namespace evosort
