#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>

namespace geomwave {

/// Velocity of a 1+1 boost, |v| < 1 (c = 1).
template <typename Scalar = double>
class BoostParameter {
 public:
  explicit BoostParameter(Scalar v) : v_(v) {
    using std::abs;
    if (!(abs(v) < Scalar(1))) {
      throw std::domain_error("boost velocity must satisfy |v| < 1");
    }
  }

  Scalar velocity() const { return v_; }

  Scalar lorentz_factor() const {
    using std::sqrt;
    return Scalar(1) / sqrt(Scalar(1) - v_ * v_);
  }

 private:
  Scalar v_;
};

/// Radius of the time slice of the hyperboloid: a sqrt(1 + t^2 / b^2).
template <typename Scalar>
Scalar slice_radius(Scalar a, Scalar b, Scalar t) {
  if (!(b > Scalar(0))) throw std::domain_error("slice_radius: b must be > 0");
  if (a < Scalar(0)) throw std::domain_error("slice_radius: a must be >= 0");
  using std::sqrt;
  const Scalar r = t / b;
  return a * sqrt(Scalar(1) + r * r);
}

/// Intersection points (+t, -t) of the zero-radius defect x^2 - t^2 = 0.
template <typename Scalar>
std::pair<Scalar, Scalar> cone_position(Scalar t) {
  return {t, -t};
}

/// (x', t') = (gamma (x - v t), gamma (t - v x)).
template <typename Scalar>
std::pair<Scalar, Scalar> boost_point(Scalar x, Scalar t,
                                      const BoostParameter<Scalar>& boost) {
  const Scalar g = boost.lorentz_factor();
  const Scalar v = boost.velocity();
  return {g * (x - v * t), g * (t - v * x)};
}

/// Boosts the worldline {(t, t)} sampled at ts and returns the largest
/// deviation of |dx'/dt'| from 1 over consecutive samples.
template <typename Scalar>
Scalar invariant_speed_check(const BoostParameter<Scalar>& boost,
                             std::span<const Scalar> ts) {
  if (ts.size() < 2) {
    throw std::invalid_argument("invariant_speed_check: need >= 2 times");
  }
  using std::abs;
  Scalar worst(0);
  auto prev = boost_point(cone_position(ts[0]).first, ts[0], boost);
  for (std::size_t n = 1; n < ts.size(); ++n) {
    const auto cur = boost_point(cone_position(ts[n]).first, ts[n], boost);
    const Scalar dt = cur.second - prev.second;
    if (dt == Scalar(0)) {
      throw std::invalid_argument(
          "invariant_speed_check: coincident boosted times");
    }
    worst = std::max(worst, abs(abs((cur.first - prev.first) / dt) - 1));
    prev = cur;
  }
  return worst;
}

/// a / b, the limit of slice_radius(a, b, t) / t.
template <typename Scalar>
Scalar hyperboloid_asymptotic_speed(Scalar a, Scalar b) {
  if (!(a > Scalar(0)) || !(b > Scalar(0))) {
    throw std::domain_error("hyperboloid_asymptotic_speed: a, b must be > 0");
  }
  return a / b;
}

/// Speed dx'/dt' of the boosted slice worldline (slice_radius(a, b, t), t)
/// between two sample times, as seen in the boosted frame.
template <typename Scalar>
Scalar boosted_slice_speed(Scalar a, Scalar b,
                           const BoostParameter<Scalar>& boost, Scalar t1,
                           Scalar t2) {
  const auto p1 = boost_point(slice_radius(a, b, t1), t1, boost);
  const auto p2 = boost_point(slice_radius(a, b, t2), t2, boost);
  const Scalar dt = p2.second - p1.second;
  if (dt == Scalar(0)) {
    throw std::invalid_argument("boosted_slice_speed: coincident times");
  }
  return (p2.first - p1.first) / dt;
}

}  // namespace geomwave
