#include "geomwave/defect_ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "geomwave/random.hpp"

namespace geomwave {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double perimeter_of(double a, double b) {
  require_positive(a, "semiaxis a");
  require_positive(b, "semiaxis b");
  return kPi * (1.5 * (a + b) - std::sqrt(a * b));
}

double a_max(double perimeter) {
  require_positive(perimeter, "perimeter");
  return perimeter / (1.5 * kPi);
}

double solve_b(double a, double perimeter) {
  require_positive(a, "semiaxis a");
  const double upper = a_max(perimeter);
  if (a > upper) {
    throw no_solution_error("solve_b: a = " + std::to_string(a) +
                            " exceeds a_max = " + std::to_string(upper));
  }
  // With s = sqrt(b): 1.5 s^2 - sqrt(a) s + (1.5 a - perimeter / pi) = 0.
  // Discriminant 6 perimeter / pi - 8 a stays above perimeter / (1.5 pi)
  // for a <= a_max; the "+" root is the one through the circle a == b.
  const double disc = 6.0 * perimeter / kPi - 8.0 * a;
  const double s = (std::sqrt(a) + std::sqrt(disc)) / 3.0;
  return s * s;
}

EllipseDefect make_defect(double a, double perimeter) {
  return EllipseDefect{a, solve_b(a, perimeter), perimeter};
}

double position_at(const EllipseDefect& defect, double t) {
  if (!(defect.b > 0.0)) {
    throw std::domain_error(
        "position_at: degenerate defect (b == 0) is the light-cone case");
  }
  if (t < 0.0) throw std::domain_error("position_at: negative time");
  const double r = t / defect.b;
  return defect.a * std::sqrt(1.0 + r * r);
}

void validate(const EnsembleConfig& cfg) {
  if (!(cfg.perimeter > 0.0) || !std::isfinite(cfg.perimeter)) {
    throw std::invalid_argument("ensemble: perimeter must be positive");
  }
  if (cfg.sample_count < 1) {
    throw std::invalid_argument("ensemble: sample_count must be >= 1");
  }
  if (!(cfg.a_min_fraction > 0.0 && cfg.a_min_fraction < 1.0)) {
    throw std::invalid_argument("ensemble: a_min_fraction must be in (0, 1)");
  }
  if (cfg.times.empty()) {
    throw std::invalid_argument("ensemble: times must be nonempty");
  }
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    if (!(cfg.times[i] >= 0.0) || !std::isfinite(cfg.times[i])) {
      throw std::invalid_argument("ensemble: times must be non-negative");
    }
    if (i > 0 && !(cfg.times[i] > cfg.times[i - 1])) {
      throw std::invalid_argument("ensemble: times must be ascending");
    }
  }
}

std::pair<double, double> a_interval(const EnsembleConfig& cfg) {
  const double top = a_max(cfg.perimeter);
  return {cfg.a_min_fraction * top, top * (1.0 - kAmaxClamp)};
}

std::vector<double> sample_semiaxes(const EnsembleConfig& cfg) {
  validate(cfg);
  const auto [lo, hi] = a_interval(cfg);
  std::vector<double> a(cfg.sample_count);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = CounterRng(cfg.seed, i).uniform(lo, hi);
  }
  return a;
}

std::vector<OccupationRegion> run_ensemble(const EnsembleConfig& cfg) {
  const std::vector<double> semiaxes = sample_semiaxes(cfg);
  std::vector<EllipseDefect> defects;
  defects.reserve(semiaxes.size());
  for (double a : semiaxes) defects.push_back(make_defect(a, cfg.perimeter));

  const auto [lo, hi] = a_interval(cfg);
  const EllipseDefect low = make_defect(lo, cfg.perimeter);
  const EllipseDefect high = make_defect(hi, cfg.perimeter);

  std::vector<OccupationRegion> regions;
  regions.reserve(cfg.times.size());
  for (double t : cfg.times) {
    OccupationRegion region;
    region.t = t;
    region.sample_positions.reserve(defects.size());
    for (const auto& d : defects) {
      region.sample_positions.push_back(position_at(d, t));
    }
    if (defects.size() == 1) {
      region.x_lo = region.x_hi = region.sample_positions.front();
    } else {
      region.x_lo = position_at(low, t);
      region.x_hi = position_at(high, t);
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

std::vector<HistogramBin> occupation_histogram(const OccupationRegion& region,
                                               std::size_t bins) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  const double width = (region.x_hi - region.x_lo) / static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    out[i].bin_center = region.x_lo + (static_cast<double>(i) + 0.5) * width;
  }
  for (double x : region.sample_positions) {
    std::size_t idx = 0;
    if (width > 0.0) {
      const double f = std::floor((x - region.x_lo) / width);
      idx = f <= 0.0 ? 0 : std::min(bins - 1, static_cast<std::size_t>(f));
    }
    ++out[idx].count;
  }
  return out;
}

std::vector<HistogramBin> occupation_histogram(const EnsembleConfig& cfg,
                                               double t, std::size_t bins) {
  EnsembleConfig single = cfg;
  single.times = {t};
  return occupation_histogram(run_ensemble(single).front(), bins);
}

}  // namespace geomwave
