#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "evosort/model.hpp"

using namespace evosort;

// Expected threshold values below were computed ahead of time with exact
// rational arithmetic (fractions evaluated at integer x, then rounded),
// independent of the double-precision evaluation path under test.

TEST_CASE("vertices match the published extrema within 0.02") {
  const auto& m = builtin_symbolic_models();
  const Vertex ins = vertex(m.insertion);
  CHECK(ins.is_minimum);
  CHECK(std::abs(ins.x - 6.60) < 0.02);

  const Vertex par = vertex(m.parallel_merge);
  CHECK_FALSE(par.is_minimum);
  CHECK(std::abs(par.x - 8.54) < 0.02);

  const Vertex np = vertex(m.fallback);
  CHECK_FALSE(np.is_minimum);
  CHECK(std::abs(np.x - 9.14) < 0.02);

  const Vertex tile = vertex(m.tile);
  CHECK(tile.is_minimum);
  CHECK(std::abs(tile.x - 7.63) < 0.02);
}

TEST_CASE("curvature signs: insertion and tile convex, merge and fallback concave") {
  const auto& m = builtin_symbolic_models();
  CHECK(m.insertion.a.value() > 0);
  CHECK(m.tile.a.value() > 0);
  CHECK(m.parallel_merge.a.value() < 0);
  CHECK(m.fallback.a.value() < 0);
}

TEST_CASE("vertex of a degenerate symmetric parabola") {
  const QuadraticModel m{{1, 1}, {0, 1}, {0, 1}, ThresholdTarget::Tile};
  const Vertex v = vertex(m);
  CHECK(v.x == 0.0);
  CHECK(v.is_minimum);
}

TEST_CASE("linear model has no vertex; n = 0 has no threshold") {
  const QuadraticModel linear{{0, 1}, {2, 1}, {3, 1}, ThresholdTarget::Tile};
  CHECK_THROWS_AS(vertex(linear), std::domain_error);
  const auto& m = builtin_symbolic_models();
  CHECK_THROWS_AS(eval_raw(m.tile, 0), std::domain_error);
}

TEST_CASE("frozen rational-arithmetic values at powers of ten") {
  const GeneBounds bounds;
  const auto& m = builtin_symbolic_models();
  CHECK(eval_threshold(m.insertion, 10'000'000, bounds) == 2368);
  CHECK(eval_threshold(m.insertion, 100'000'000, bounds) == 2413);
  CHECK(eval_threshold(m.parallel_merge, 10'000'000, bounds) == 8594);
  CHECK(eval_threshold(m.fallback, 10'000'000, bounds) == 46263);
  CHECK(eval_threshold(m.tile, 10'000'000, bounds) == 4995);
  CHECK(eval_threshold(m.tile, 100'000'000, bounds) == 4230);
  // Far below the fit range the raw values go negative and clamp to bounds.
  CHECK(eval_threshold(m.parallel_merge, 100'000, bounds) == bounds.parallel_merge_threshold.min);
  CHECK(eval_threshold(m.fallback, 100'000, bounds) == bounds.fallback_threshold.min);
}

TEST_CASE("symbolic_params produces valid code-4 vectors") {
  const GeneBounds bounds;
  const TuningParams p = symbolic_params(100'000'000);
  CHECK(p.algorithm.code == 4);
  CHECK_NOTHROW(validate(p, bounds));
}

TEST_CASE("symbolic_params(1) clamps the out-of-range genes to bound edges") {
  const GeneBounds bounds;
  const TuningParams p = symbolic_params(1);
  CHECK_NOTHROW(validate(p, bounds));
  CHECK(p.parallel_merge_threshold == bounds.parallel_merge_threshold.min);
  CHECK(p.fallback_threshold == bounds.fallback_threshold.min);
  CHECK(p.tile_size == bounds.tile_size.max);
}

TEST_CASE("insertion threshold is strictly increasing past its vertex") {
  const auto& m = builtin_symbolic_models();
  double prev = eval_raw(m.insertion, 100'000'000);
  for (double n = 2e8; n <= 1e10; n *= 1.5) {
    const double curr = eval_raw(m.insertion, static_cast<std::size_t>(n));
    CHECK(curr > prev);
    prev = curr;
  }
}

TEST_CASE("clamped output validates for n across twelve decades") {
  const GeneBounds bounds;
  for (std::size_t n = 1; n <= 1'000'000'000'000ull; n *= 10) {
    CHECK_NOTHROW(validate(symbolic_params(n), bounds));
    CHECK_NOTHROW(validate(symbolic_params(n * 3), bounds));
  }
}
