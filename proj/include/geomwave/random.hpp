#pragma once

#include <cstdint>
#include <vector>

#include "geomwave/types.hpp"

namespace geomwave {

/// SplitMix64 finalizer. Used to derive an independent stream per sample
/// index so draws do not depend on evaluation order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Maps 64 random bits to [0, 1) using the top 53 bits.
constexpr double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Small counter-based generator: draw k of stream s is a pure function of
/// (seed, s, k).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next_bits() { return splitmix64(key_ + counter_++); }

  double uniform() { return unit_interval(next_bits()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer uniformly drawn from [lo, hi].
  long long uniform_int(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_bits() % span);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Deterministic spacetime probe points, uniform over [lo, hi]^4.
inline std::vector<FourVector<double>> probe_points(std::size_t count,
                                                    std::uint64_t seed,
                                                    double lo = -5.0,
                                                    double hi = 5.0) {
  CounterRng rng(seed, 0x70726f6265ULL);
  std::vector<FourVector<double>> points;
  points.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    FourVector<double> x;
    for (int mu = 0; mu < 4; ++mu) x(mu) = rng.uniform(lo, hi);
    points.push_back(x);
  }
  return points;
}

}  // namespace geomwave
