#include "realspace/profiler.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "realspace/errors.hpp"

namespace realspace {

std::string growth_class_name(GrowthClass c) {
  switch (c) {
    case GrowthClass::Constant: return "constant";
    case GrowthClass::Log: return "log2 n";
    case GrowthClass::Linear: return "n";
    case GrowthClass::LinearLog: return "n log2 n";
    case GrowthClass::Quadratic: return "n^2";
  }
  return "?";
}

std::vector<TraceSample> sample(const MeteredFamily& family,
                                const std::vector<std::size_t>& grid) {
  if (grid.empty()) throw Error("sampling grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw Error("sampling grid must be strictly increasing");
  std::vector<TraceSample> out;
  out.reserve(grid.size());
  for (std::size_t n : grid) {
    SpaceMeter meter;
    family(n, meter);
    out.push_back({n, meter.peak_cells()});
  }
  return out;
}

std::vector<std::size_t> default_grid() { return {64, 128, 256, 512, 1024, 2048, 4096}; }

std::vector<std::size_t> compact_grid() { return {64, 128, 256, 512, 1024}; }

namespace {

double shape(GrowthClass c, double n) {
  switch (c) {
    case GrowthClass::Constant: return 1.0;
    case GrowthClass::Log: return std::log2(n);
    case GrowthClass::Linear: return n;
    case GrowthClass::LinearLog: return n * std::log2(n);
    case GrowthClass::Quadratic: return n * n;
  }
  return 0.0;
}

struct Fit {
  double c = 0.0;
  double d = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

Fit fit_class(GrowthClass cls, const std::vector<TraceSample>& samples) {
  std::size_t count = samples.size();
  Fit fit;
  if (cls == GrowthClass::Constant) {
    double mean = 0.0;
    for (const auto& s : samples) mean += static_cast<double>(s.peak_cells);
    mean /= static_cast<double>(count);
    double sq = 0.0;
    for (const auto& s : samples) {
      double e = static_cast<double>(s.peak_cells) - mean;
      sq += e * e;
    }
    fit.c = mean;
    fit.d = 0.0;
    fit.residual = std::sqrt(sq / static_cast<double>(count));
    return fit;
  }
  double mg = 0.0, mp = 0.0;
  for (const auto& s : samples) {
    mg += shape(cls, static_cast<double>(s.n));
    mp += static_cast<double>(s.peak_cells);
  }
  mg /= static_cast<double>(count);
  mp /= static_cast<double>(count);
  double cov = 0.0, var = 0.0;
  for (const auto& s : samples) {
    double gd = shape(cls, static_cast<double>(s.n)) - mg;
    cov += gd * (static_cast<double>(s.peak_cells) - mp);
    var += gd * gd;
  }
  if (var <= 0.0) return fit;
  fit.c = cov / var;
  fit.d = mp - fit.c * mg;
  double span = fit.c * (shape(cls, static_cast<double>(samples.back().n)) -
                         shape(cls, static_cast<double>(samples.front().n)));
  // The shape must actually carry growth; otherwise it is a constant in
  // disguise and the constant class should win the comparison.
  if (span < 1.0) return fit;
  double sq = 0.0;
  for (const auto& s : samples) {
    double e = fit.c * shape(cls, static_cast<double>(s.n)) + fit.d -
               static_cast<double>(s.peak_cells);
    sq += e * e;
  }
  fit.residual = std::sqrt(sq / static_cast<double>(count));
  return fit;
}

}  // namespace

GrowthVerdict classify(const std::vector<TraceSample>& samples) {
  if (samples.size() < 4)
    throw InsufficientSamples("need at least 4 samples, have " + std::to_string(samples.size()));
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].n <= samples[i - 1].n)
      throw InsufficientSamples("sample indices must be strictly increasing");
  if (samples.back().n < 16 * samples.front().n)
    throw InsufficientSamples("sample grid too narrow: need max(n)/min(n) >= 16");
  const GrowthClass classes[] = {GrowthClass::Constant, GrowthClass::Log, GrowthClass::Linear,
                                 GrowthClass::LinearLog, GrowthClass::Quadratic};
  GrowthVerdict verdict;
  double best = std::numeric_limits<double>::infinity();
  double runner = std::numeric_limits<double>::infinity();
  for (GrowthClass cls : classes) {
    Fit fit = fit_class(cls, samples);
    if (fit.residual < best) {
      runner = best;
      best = fit.residual;
      verdict.best_class = cls;
      verdict.fit_constant = fit.c;
      verdict.residual = fit.residual;
    } else if (fit.residual < runner) {
      runner = fit.residual;
    }
  }
  if (best == 0.0)
    verdict.margin = runner == 0.0 ? 1.0 : 1e12;
  else if (std::isinf(runner))
    verdict.margin = 1e12;
  else
    verdict.margin = runner / best;
  if (verdict.margin < 1.0) verdict.margin = 1.0;
  return verdict;
}

void write_samples_csv(std::ostream& os, const std::vector<TraceSample>& samples) {
  os << "n,peak_cells\n";
  for (const auto& s : samples) os << s.n << ',' << s.peak_cells << '\n';
}

}  // namespace realspace
