#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evosort/rng.hpp"

namespace evosort {

// Seeded uniform integer dataset. Identical spec -> bit-identical array on
// every platform (see rng.hpp).
struct DatasetSpec {
  std::size_t n = 0;
  int element_width = 64;  // 32 or 64
  std::int64_t low = -1'000'000'000;
  std::int64_t high = 1'000'000'000;  // inclusive
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultMemoryCapBytes = 8ull << 30;

template <typename T>
std::vector<T> generate_dataset(const DatasetSpec& spec,
                                std::size_t memory_cap_bytes = kDefaultMemoryCapBytes) {
  static_assert(std::is_integral_v<T> && std::is_signed_v<T>);
  if (spec.low >= spec.high) {
    throw std::invalid_argument("generate_dataset: low must be < high");
  }
  if (spec.n * sizeof(T) > memory_cap_bytes) {
    throw std::length_error(
        "generate_dataset: " + std::to_string(spec.n) + " elements of " +
        std::to_string(sizeof(T)) + " bytes exceed the memory cap of " +
        std::to_string(memory_cap_bytes) + " bytes");
  }
  std::vector<T> data(spec.n);
  Xoshiro256 rng(spec.seed);
  for (auto& v : data) {
    v = static_cast<T>(rng.uniform_int(spec.low, spec.high));
  }
  return data;
}

}  // namespace evosort
