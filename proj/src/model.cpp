#include "evosort/model.hpp"

#include <algorithm>
#include <cmath>

namespace evosort {

const SymbolicParamSet& builtin_symbolic_models() {
  static const SymbolicParamSet set{
      // T_ins
      {{18093685, 726826}, {-227830214, 693565}, {1730747635, 502001},
       ThresholdTarget::Insertion},
      // T_par
      {{-4279813193, 907161}, {79199394278, 983501}, {-309812890693, 956422},
       ThresholdTarget::ParallelMerge},
      // T_np
      {{-3680680444, 890339}, {39413203286, 521933}, {-219719696809, 785367},
       ThresholdTarget::Fallback},
      // T_tile
      {{2451303315, 877429}, {-7878849997, 184645}, {157328357967, 943252},
       ThresholdTarget::Tile},
  };
  return set;
}

double eval_raw(const QuadraticModel& model, std::size_t n) {
  if (n == 0) throw std::domain_error("eval_threshold: n must be >= 1");
  const double x = std::log10(static_cast<double>(n));
  return model.a.value() * x * x + model.b.value() * x + model.c.value();
}

namespace {

GeneRange range_for(ThresholdTarget target, const GeneBounds& bounds) {
  switch (target) {
    case ThresholdTarget::Insertion: return bounds.insertion_threshold;
    case ThresholdTarget::ParallelMerge: return bounds.parallel_merge_threshold;
    case ThresholdTarget::Fallback: return bounds.fallback_threshold;
    case ThresholdTarget::Tile: return bounds.tile_size;
  }
  throw std::logic_error("unknown threshold target");
}

}  // namespace

std::int64_t eval_threshold(const QuadraticModel& model, std::size_t n,
                            const GeneBounds& bounds) {
  const double raw = eval_raw(model, n);
  const GeneRange range = range_for(model.target, bounds);
  const double rounded = std::nearbyint(raw);
  if (rounded <= static_cast<double>(range.min)) return range.min;
  if (rounded >= static_cast<double>(range.max)) return range.max;
  return static_cast<std::int64_t>(rounded);
}

Vertex vertex(const QuadraticModel& model) {
  const double a = model.a.value();
  if (model.a.num == 0) throw std::domain_error("linear model has no vertex");
  return {-model.b.value() / (2.0 * a), a > 0.0};
}

TuningParams symbolic_params(std::size_t n, const GeneBounds& bounds) {
  const auto& models = builtin_symbolic_models();
  TuningParams p;
  p.insertion_threshold = eval_threshold(models.insertion, n, bounds);
  p.parallel_merge_threshold = eval_threshold(models.parallel_merge, n, bounds);
  p.algorithm.code = AlgorithmCode::kRadix;
  p.fallback_threshold = eval_threshold(models.fallback, n, bounds);
  p.tile_size = eval_threshold(models.tile, n, bounds);
  return validate(p, bounds);
}

}  // namespace evosort
