#pragma once

#include <cstdint>
#include <stdexcept>

#include "evosort/params.hpp"

namespace evosort {

// Exact rational coefficient; converted to double only at evaluation so the
// transcription stays auditable.
struct Rational {
  std::int64_t num;
  std::int64_t den;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class ThresholdTarget { Insertion, ParallelMerge, Fallback, Tile };

// T(n) = a*x^2 + b*x + c with x = log10(n).
struct QuadraticModel {
  Rational a;
  Rational b;
  Rational c;
  ThresholdTarget target;
};

struct Vertex {
  double x;          // x* = -b / (2a)
  bool is_minimum;   // a > 0
};

struct SymbolicParamSet {
  QuadraticModel insertion;
  QuadraticModel parallel_merge;
  QuadraticModel fallback;
  QuadraticModel tile;
};

// The four built-in threshold models (algorithm code fixed to radix).
const SymbolicParamSet& builtin_symbolic_models();

double eval_raw(const QuadraticModel& model, std::size_t n);

// Nearest integer, clamped into the gene's bounds. Throws on n = 0.
std::int64_t eval_threshold(const QuadraticModel& model, std::size_t n,
                            const GeneBounds& bounds);

Vertex vertex(const QuadraticModel& model);

// Closed-form replacement for the GA loop: evaluates the four thresholds at n,
// fixes the algorithm code to 4, and returns a validated parameter vector.
TuningParams symbolic_params(std::size_t n, const GeneBounds& bounds = {});

}  // namespace evosort
