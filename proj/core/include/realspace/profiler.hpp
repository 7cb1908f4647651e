#ifndef REALSPACE_PROFILER_HPP
#define REALSPACE_PROFILER_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "realspace/meter.hpp"

namespace realspace {

struct TraceSample {
  std::size_t n = 0;
  std::size_t peak_cells = 0;
};

enum class GrowthClass { Constant, Log, Linear, LinearLog, Quadratic };

std::string growth_class_name(GrowthClass c);

struct GrowthVerdict {
  GrowthClass best_class = GrowthClass::Constant;
  double fit_constant = 0.0;  // leading coefficient (the level, for constant)
  double residual = 0.0;      // RMS misfit of the winning class
  double margin = 1.0;        // runner-up residual / winning residual
};

/// One computation per grid point, each on a fresh meter.
using MeteredFamily = std::function<void(std::size_t n, SpaceMeter& meter)>;

/// Grid must be nonempty and strictly increasing.
std::vector<TraceSample> sample(const MeteredFamily& family, const std::vector<std::size_t>& grid);

/// n = 64, 128, ..., 4096.
std::vector<std::size_t> default_grid();
/// n = 64, 128, ..., 1024, for families too expensive on the full grid.
std::vector<std::size_t> compact_grid();

/// Least-squares fit of peak = c * g(n) + d for each candidate shape g in
/// {1, log2 n, n, n log2 n, n^2}; the winner minimizes RMS residual.  A
/// non-constant shape whose fitted term moves less than one cell across
/// the grid, or shrinks, is ruled out rather than allowed to imitate a
/// constant.  Requires at least 4 samples with max(n)/min(n) >= 16, else
/// InsufficientSamples.
GrowthVerdict classify(const std::vector<TraceSample>& samples);

/// Header "n,peak_cells".
void write_samples_csv(std::ostream& os, const std::vector<TraceSample>& samples);

}  // namespace realspace

#endif
