#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>

#include "evosort/params.hpp"
#include "evosort/pool.hpp"
#include "evosort/sorters.hpp"

namespace evosort {

enum class SortPath { HostStandardSort, RadixSort, RefinedMergesort };

inline const char* to_string(SortPath path) {
  switch (path) {
    case SortPath::HostStandardSort: return "HostStandardSort";
    case SortPath::RadixSort: return "RadixSort";
    case SortPath::RefinedMergesort: return "RefinedMergesort";
  }
  return "?";
}

enum class ElementKind { Int32, Int64, OtherOrdered };

template <typename T>
constexpr ElementKind element_kind_of() {
  if constexpr (std::same_as<T, std::int32_t>) {
    return ElementKind::Int32;
  } else if constexpr (std::same_as<T, std::int64_t>) {
    return ElementKind::Int64;
  } else {
    return ElementKind::OtherOrdered;
  }
}

struct DispatchDecision {
  SortPath chosen_path;
  std::string reason;
};

// Pure path selection: the host standard sort below fallback_threshold, the
// radix path for large arrays of 32/64-bit signed integers when the code says
// so, refined mergesort otherwise.
inline DispatchDecision decide(std::size_t n, ElementKind kind,
                               const TuningParams& params) {
  if (static_cast<std::int64_t>(n) < params.fallback_threshold) {
    return {SortPath::HostStandardSort,
            "n=" + std::to_string(n) + " < fallback_threshold=" +
                std::to_string(params.fallback_threshold)};
  }
  const bool integer = kind == ElementKind::Int32 || kind == ElementKind::Int64;
  if (params.algorithm.selects_radix() && integer) {
    return {SortPath::RadixSort,
            "n >= fallback_threshold, code 4, integer element"};
  }
  std::string why = "n >= fallback_threshold, ";
  if (params.algorithm.code == AlgorithmCode::kMergesort) {
    why += "code 3";
  } else if (params.algorithm.selects_radix()) {
    why += "code 4 but non-integer element";
  } else {
    why += "code " + std::to_string(params.algorithm.code) + " (treated as mergesort)";
  }
  return {SortPath::RefinedMergesort, why};
}

// AdaptivePartitionSort: sorts buf.primary in place and reports which path ran.
template <typename T>
DispatchDecision adaptive_partition_sort(SortBuffer<T>& buf,
                                         const TuningParams& params,
                                         WorkerPool& pool) {
  const DispatchDecision decision =
      decide(buf.primary.size(), element_kind_of<T>(), params);
  switch (decision.chosen_path) {
    case SortPath::HostStandardSort:
      std::sort(buf.primary.begin(), buf.primary.end());
      break;
    case SortPath::RadixSort:
      if constexpr (RadixElement<T>) {
        radix_sort_signed<T>(buf.primary, buf.scratch, pool);
      }
      break;
    case SortPath::RefinedMergesort:
      refined_parallel_mergesort<T>(
          buf.primary, buf.scratch,
          static_cast<std::size_t>(params.insertion_threshold),
          static_cast<std::size_t>(params.parallel_merge_threshold),
          static_cast<std::size_t>(params.tile_size), pool);
      break;
  }
  return decision;
}

}  // namespace evosort
