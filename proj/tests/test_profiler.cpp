#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "realspace/builtins.hpp"
#include "realspace/errors.hpp"
#include "realspace/profiler.hpp"

using namespace realspace;

namespace {

std::vector<TraceSample> synth(const std::vector<std::size_t>& grid, double (*shape)(double),
                               double jitter = 0.0) {
  std::vector<TraceSample> out;
  int flip = 1;
  for (std::size_t n : grid) {
    double v = shape(static_cast<double>(n));
    v *= 1.0 + jitter * flip;
    flip = -flip;
    out.push_back({n, static_cast<std::size_t>(v + 0.5)});
  }
  return out;
}

}  // namespace

TEST_SUITE("profiler") {

TEST_CASE("the grids are powers of two") {
  std::vector<std::size_t> d = default_grid();
  REQUIRE(d.size() == 7);
  CHECK(d.front() == 64);
  CHECK(d.back() == 4096);
  std::vector<std::size_t> c = compact_grid();
  CHECK(c.front() == 64);
  CHECK(c.back() == 1024);
}

TEST_CASE("noiseless shapes are recovered exactly") {
  auto grid = default_grid();
  struct Case {
    double (*shape)(double);
    GrowthClass expect;
  };
  Case cases[] = {
      {[](double) { return 17.0; }, GrowthClass::Constant},
      {[](double n) { return 5.0 * std::log2(n) + 3.0; }, GrowthClass::Log},
      {[](double n) { return 2.0 * n + 11.0; }, GrowthClass::Linear},
      {[](double n) { return 0.5 * n * std::log2(n) + 7.0; }, GrowthClass::LinearLog},
      {[](double n) { return 0.02 * n * n + 1.0; }, GrowthClass::Quadratic},
  };
  for (const Case& c : cases) {
    GrowthVerdict v = classify(synth(grid, c.shape));
    CHECK(v.best_class == c.expect);
    CHECK(v.margin >= 2.0);
  }
}

TEST_CASE("moderate jitter does not change the verdict") {
  auto grid = default_grid();
  GrowthVerdict log_v = classify(synth(grid, [](double n) { return 6.0 * std::log2(n); }, 0.05));
  CHECK(log_v.best_class == GrowthClass::Log);
  // Linear and n log n are the closest pair of shapes on this grid, so the
  // linear case gets a gentler 2 percent.
  GrowthVerdict lin_v = classify(synth(grid, [](double n) { return 3.0 * n; }, 0.02));
  CHECK(lin_v.best_class == GrowthClass::Linear);
  GrowthVerdict quad_v =
      classify(synth(grid, [](double n) { return 0.01 * n * n; }, 0.05));
  CHECK(quad_v.best_class == GrowthClass::Quadratic);
}

TEST_CASE("scaling the peaks does not change the class") {
  auto grid = default_grid();
  for (double scale : {1.0, 4.0, 32.0}) {
    std::vector<TraceSample> s = synth(grid, [](double n) { return n * std::log2(n); });
    for (TraceSample& t : s) t.peak_cells = static_cast<std::size_t>(t.peak_cells * scale);
    CHECK(classify(s).best_class == GrowthClass::LinearLog);
  }
}

TEST_CASE("flat data is constant, not a zero-coefficient curve") {
  std::vector<TraceSample> flat;
  for (std::size_t n : default_grid()) flat.push_back({n, 10});
  GrowthVerdict v = classify(flat);
  CHECK(v.best_class == GrowthClass::Constant);
  CHECK(v.fit_constant == doctest::Approx(10.0));
  CHECK(v.margin >= 2.0);
}

TEST_CASE("thin or narrow sample sets are refused") {
  std::vector<TraceSample> three = {{64, 1}, {128, 2}, {256, 3}};
  CHECK_THROWS_AS(classify(three), InsufficientSamples);

  std::vector<TraceSample> unsorted = {{64, 1}, {256, 2}, {128, 3}, {512, 4}};
  CHECK_THROWS_AS(classify(unsorted), InsufficientSamples);

  std::vector<TraceSample> narrow = {{64, 1}, {128, 2}, {256, 3}, {512, 4}};
  CHECK_THROWS_AS(classify(narrow), InsufficientSamples);
}

TEST_CASE("sampling runs the family once per grid point") {
  int calls = 0;
  MeteredFamily family = [&calls](std::size_t n, SpaceMeter& meter) {
    ++calls;
    MeteredInt reg(meter);
    reg.set_u64(n);  // log2(n) bits
  };
  std::vector<std::size_t> grid = {64, 256, 1024, 4096};
  std::vector<TraceSample> s = sample(family, grid);
  CHECK(calls == 4);
  REQUIRE(s.size() == 4);
  CHECK(s[0].n == 64);
  CHECK(s[0].peak_cells == 7);
  CHECK(s[3].peak_cells == 13);

  CHECK_THROWS_AS(sample(family, {}), Error);
  CHECK_THROWS_AS(sample(family, {64, 64}), Error);
}

TEST_CASE("a real stream classifies on the compact grid") {
  auto mu2 = make_builtin("mu-square");
  MeteredFamily family = [&mu2](std::size_t n, SpaceMeter& meter) { mu2->eval(n, meter); };
  GrowthVerdict v = classify(sample(family, compact_grid()));
  CHECK(v.best_class == GrowthClass::Log);
  CHECK(v.margin >= 2.0);

  RationalGen third(1, 3, 2);
  MeteredFamily rat_family = [&third](std::size_t n, SpaceMeter& meter) { third.eval(n, meter); };
  GrowthVerdict rv = classify(sample(rat_family, compact_grid()));
  CHECK(rv.best_class == GrowthClass::Constant);
}

TEST_CASE("samples print as CSV") {
  std::vector<TraceSample> s = {{64, 7}, {128, 8}};
  std::ostringstream os;
  write_samples_csv(os, s);
  CHECK(os.str() == "n,peak_cells\n64,7\n128,8\n");
}

TEST_CASE("class names are stable strings") {
  CHECK(growth_class_name(GrowthClass::Constant) == "constant");
  CHECK(growth_class_name(GrowthClass::Log) == "log2 n");
  CHECK(growth_class_name(GrowthClass::Linear) == "n");
  CHECK(growth_class_name(GrowthClass::LinearLog) == "n log2 n");
  CHECK(growth_class_name(GrowthClass::Quadratic) == "n^2");
}

}
