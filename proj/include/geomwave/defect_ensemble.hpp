#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geomwave {

class no_solution_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Perimeter approximation pi (1.5 (a + b) - sqrt(a b)) of an ellipse with
/// semiaxes a, b.
double perimeter_of(double a, double b);

/// Largest semiaxis reachable at fixed perimeter: perimeter / (1.5 pi).
double a_max(double perimeter);

/// Positive b with perimeter_of(a, b) == perimeter, on the branch through
/// the circle a == b. Requires 0 < a <= a_max(perimeter).
double solve_b(double a, double perimeter);

/// Equal-perimeter ellipse. Construct through make_defect so the perimeter
/// constraint holds.
struct EllipseDefect {
  double a = 0;
  double b = 0;
  double perimeter = 0;
};

EllipseDefect make_defect(double a, double perimeter);

/// x(t) = a sqrt(1 + t^2 / b^2), the positive branch of the hyperbola
/// x^2/a^2 - t^2/b^2 = 1. The mirror branch is -x(t).
double position_at(const EllipseDefect& defect, double t);

struct EnsembleConfig {
  double perimeter = 0;
  std::size_t sample_count = 0;
  double a_min_fraction = 0.01;
  std::uint64_t seed = 0;
  std::vector<double> times;
};

/// Throws std::invalid_argument if the configuration is unusable.
void validate(const EnsembleConfig& cfg);

/// Clamp applied to the upper end of the a-interval.
inline constexpr double kAmaxClamp = 1e-9;

/// [a_min, a_max (1 - kAmaxClamp)] for this configuration.
std::pair<double, double> a_interval(const EnsembleConfig& cfg);

struct OccupationRegion {
  double t = 0;
  double x_lo = 0;
  double x_hi = 0;
  std::vector<double> sample_positions;
};

/// Semiaxis draws. Draw i is a function of (seed, i) only.
std::vector<double> sample_semiaxes(const EnsembleConfig& cfg);

/// One region per entry of cfg.times. The envelope comes from the interval
/// endpoints (position_at is increasing in a at fixed t); a single-sample
/// ensemble reports that sample's trajectory as its envelope.
std::vector<OccupationRegion> run_ensemble(const EnsembleConfig& cfg);

struct HistogramBin {
  double bin_center = 0;
  std::size_t count = 0;
};

std::vector<HistogramBin> occupation_histogram(const EnsembleConfig& cfg,
                                               double t, std::size_t bins);

/// Same, reusing an already computed region.
std::vector<HistogramBin> occupation_histogram(const OccupationRegion& region,
                                               std::size_t bins);

}  // namespace geomwave
