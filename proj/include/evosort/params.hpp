#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evosort {

// Algorithm selector gene. Codes 0..4 are representable; 4 selects the radix
// path for integer element types, everything else routes to refined mergesort.
struct AlgorithmCode {
  int code = 3;

  static constexpr int kRadix = 4;
  static constexpr int kMergesort = 3;

  bool selects_radix() const { return code == kRadix; }
  bool operator==(const AlgorithmCode&) const = default;
};

// The five-gene tuning vector governing all sort dispatch.
struct TuningParams {
  std::int64_t insertion_threshold = 0;
  std::int64_t parallel_merge_threshold = 0;
  AlgorithmCode algorithm{};
  std::int64_t fallback_threshold = 0;  // size below which the host std sort runs
  std::int64_t tile_size = 0;

  bool operator==(const TuningParams&) const = default;
};

constexpr int kGeneCount = 5;

struct GeneRange {
  std::int64_t min = 1;
  std::int64_t max = 1;
};

struct GeneBounds {
  GeneRange insertion_threshold{16, 8192};
  GeneRange parallel_merge_threshold{512, 65536};
  GeneRange fallback_threshold{1024, 131072};
  GeneRange tile_size{256, 32768};
  // Allowed algorithm codes; the default tuner only ever draws from these.
  std::int64_t allowed_codes_min = 3;
  std::int64_t allowed_codes_max = 4;

  bool code_allowed(int code) const {
    return code >= allowed_codes_min && code <= allowed_codes_max;
  }
};

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Returns params unchanged if every gene is in-bounds; throws ValidationError
// naming the offending gene otherwise. Idempotent by construction.
TuningParams validate(const TuningParams& params, const GeneBounds& bounds);

// Positional gene access in the order (T_insertion, T_merge, A_code, T_numpy,
// T_tile) used throughout the GA.
std::int64_t gene_get(const TuningParams& params, int index);
void gene_set(TuningParams& params, int index, std::int64_t value);
GeneRange gene_range(const GeneBounds& bounds, int index);

// JSON object form with snake_case keys; parse also accepts the positional
// 5-integer array form "[3075, 31291, 4, 99574, 1418]".
std::string to_json(const TuningParams& params);
TuningParams params_from_json(const std::string& text);

// "[a, b, c, d, e]" display form.
std::string to_list_string(const TuningParams& params);

}  // namespace evosort
