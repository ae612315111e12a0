#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "geomwave/clifford.hpp"
#include "geomwave/random.hpp"
#include "geomwave/types.hpp"

namespace geomwave {

/// Absolute tolerance on residuals of unit-normalized quantities.
inline constexpr double kResidualTolerance = 1e-12;

enum class SpinBranch { up, down };

/// Raised when a zero momentum component makes the matching wavelength
/// infinite.
class infinite_wavelength_error : public std::domain_error {
 public:
  explicit infinite_wavelength_error(int axis)
      : std::domain_error("infinite wavelength on axis " +
                          std::to_string(axis)),
        axis_(axis) {}

  int axis() const noexcept { return axis_; }

 private:
  int axis_;
};

class off_shell_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Plane-wave solution psi(x) = u exp(-i p.x) of the free Dirac equation.
///
/// States built by make_state / solve_bispinor have positive energy.
/// Spatial reflections (apply_reflection with mu > 0) flip the energy sign;
/// such states are still exact solutions and on shell.
template <typename Scalar = double>
struct OnShellState {
  FourVector<Scalar> momentum;
  Scalar mass{};
  Bispinor<Scalar> amplitude;
  SpinBranch branch = SpinBranch::up;
};

/// p0^2 - |p|^2 - m^2.
template <typename Derived>
typename Derived::Scalar mass_shell_residual(
    const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar mass) {
  return minkowski_dot(p, p) - mass * mass;
}

template <typename Derived>
bool on_shell(const Eigen::MatrixBase<Derived>& p,
              typename Derived::Scalar mass,
              double tol = kResidualTolerance) {
  using std::abs;
  using Scalar = typename Derived::Scalar;
  const Scalar scale = std::max(Scalar(1), p(0) * p(0));
  return abs(mass_shell_residual(p, mass)) <= Scalar(tol) * scale;
}

/// Unit-norm positive-energy spinor u with (gamma^mu p_mu - m) u = 0.
///
/// u = (chi, (sigma.p) chi / (E + m)) normalized, chi = (1,0) for up and
/// (0,1) for down. The two branches are orthogonal.
template <typename Derived>
Bispinor<typename Derived::Scalar> solve_bispinor(
    const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar mass,
    SpinBranch branch) {
  using Scalar = typename Derived::Scalar;
  using C = std::complex<Scalar>;
  if (!(p(0) > Scalar(0))) {
    throw std::domain_error("solve_bispinor: energy must be positive");
  }
  if (mass < Scalar(0)) {
    throw std::domain_error("solve_bispinor: negative mass");
  }
  if (!on_shell(p, mass)) {
    throw off_shell_error("solve_bispinor: momentum is off the mass shell");
  }
  const Scalar denom = p(0) + mass;
  const C px(p(1)), py(p(2)), pz(p(3));
  const C i(0, 1);
  Bispinor<Scalar> u;
  if (branch == SpinBranch::up) {
    u << C(1), C(0), pz / denom, (px + i * py) / denom;
  } else {
    u << C(0), C(1), (px - i * py) / denom, -pz / denom;
  }
  return u.normalized();
}

/// Builds the positive-energy state for a spatial momentum and mass.
template <typename Derived>
OnShellState<typename Derived::Scalar> make_state(
    const Eigen::MatrixBase<Derived>& spatial_momentum,
    typename Derived::Scalar mass, SpinBranch branch) {
  using Scalar = typename Derived::Scalar;
  using std::sqrt;
  OnShellState<Scalar> state;
  state.momentum << sqrt(spatial_momentum.squaredNorm() + mass * mass),
      spatial_momentum(0), spatial_momentum(1), spatial_momentum(2);
  state.mass = mass;
  state.branch = branch;
  state.amplitude = solve_bispinor(state.momentum, mass, branch);
  return state;
}

/// exp(-i p_mu x^mu) with p_mu x^mu = p0 x0 - p.x.
template <typename DerivedP, typename DerivedX>
std::complex<typename DerivedP::Scalar> plane_wave_phase(
    const Eigen::MatrixBase<DerivedP>& p,
    const Eigen::MatrixBase<DerivedX>& x) {
  using Scalar = typename DerivedP::Scalar;
  return std::polar(Scalar(1), -minkowski_dot(p, x));
}

template <typename Scalar, typename Derived>
std::complex<Scalar> phase(const OnShellState<Scalar>& state,
                           const Eigen::MatrixBase<Derived>& x) {
  return plane_wave_phase(state.momentum, x);
}

template <typename Scalar, typename Derived>
Bispinor<Scalar> wavefunction(const OnShellState<Scalar>& state,
                              const Eigen::MatrixBase<Derived>& x) {
  return state.amplitude * phase(state, x);
}

/// i gamma^mu d_mu psi - m psi at x, derivatives taken analytically:
/// d_mu psi = -i p_mu psi with p_mu the covariant momentum.
template <typename Scalar, typename Derived>
Bispinor<Scalar> dirac_residual(const OnShellState<Scalar>& state,
                                const Eigen::MatrixBase<Derived>& x) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  const Bispinor<Scalar> psi = wavefunction(state, x);
  Bispinor<Scalar> out = -C(state.mass) * psi;
  for (int mu = 0; mu < 4; ++mu) {
    const Scalar p_lower = MetricSignature<Scalar>::component(mu) *
                           state.momentum(mu);
    const Bispinor<Scalar> d_psi = -i * C(p_lower) * psi;
    out += i * (gamma<Scalar>(mu) * d_psi);
  }
  return out;
}

/// 2 pi / p for a single component.
template <typename Scalar>
Scalar wavelength_component(Scalar p, int axis) {
  if (p == Scalar(0)) throw infinite_wavelength_error(axis);
  return Scalar(2) * std::numbers::pi_v<Scalar> / p;
}

/// Componentwise lambda_mu = 2 pi / p_mu.
template <typename Derived>
FourVector<typename Derived::Scalar> wavelengths_from_momentum(
    const Eigen::MatrixBase<Derived>& p) {
  FourVector<typename Derived::Scalar> out;
  for (int mu = 0; mu < 4; ++mu) out(mu) = wavelength_component(p(mu), mu);
  return out;
}

/// Componentwise p_mu = 2 pi / lambda_mu.
template <typename Derived>
FourVector<typename Derived::Scalar> momentum_from_wavelengths(
    const Eigen::MatrixBase<Derived>& lambda) {
  using Scalar = typename Derived::Scalar;
  FourVector<Scalar> out;
  for (int mu = 0; mu < 4; ++mu) {
    if (lambda(mu) == Scalar(0)) {
      throw std::domain_error("momentum_from_wavelengths: zero wavelength on "
                              "axis " + std::to_string(mu));
    }
    out(mu) = Scalar(2) * std::numbers::pi_v<Scalar> / lambda(mu);
  }
  return out;
}

/// lambda0^-2 - lambda1^-2 - lambda2^-2 - lambda3^-2 - (m / 2 pi)^2.
template <typename Derived>
typename Derived::Scalar wavelength_identity_residual(
    const Eigen::MatrixBase<Derived>& lambda, typename Derived::Scalar mass) {
  using Scalar = typename Derived::Scalar;
  const FourVector<Scalar> inv_sq = lambda.cwiseAbs2().cwiseInverse();
  const Scalar lm = mass / (Scalar(2) * std::numbers::pi_v<Scalar>);
  return minkowski_dot(inv_sq, FourVector<Scalar>::Ones()) - lm * lm;
}

/// Largest term of the wavelength identity, for relative comparisons.
template <typename Derived>
typename Derived::Scalar wavelength_identity_scale(
    const Eigen::MatrixBase<Derived>& lambda, typename Derived::Scalar mass) {
  using Scalar = typename Derived::Scalar;
  const Scalar lm = mass / (Scalar(2) * std::numbers::pi_v<Scalar>);
  return std::max(lambda.cwiseAbs2().cwiseInverse().maxCoeff(), lm * lm);
}

/// Max over probes of |psi(x + n lambda) - psi(x)|, shifting each axis by
/// n_mu whole wavelengths. Axes with n_mu == 0 are left alone, so a zero
/// momentum component only fails when it is actually shifted.
template <typename Scalar>
Scalar translation_invariance_check(
    const OnShellState<Scalar>& state, const std::array<long long, 4>& shift,
    std::span<const FourVector<Scalar>> probes) {
  FourVector<Scalar> offset = FourVector<Scalar>::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    if (shift[mu] == 0) continue;
    offset(mu) = Scalar(shift[mu]) *
                 wavelength_component(state.momentum(mu), mu);
  }
  Scalar worst(0);
  for (const auto& x : probes) {
    const FourVector<Scalar> shifted = x + offset;
    worst = std::max(
        worst, (wavefunction(state, shifted) - wavefunction(state, x)).norm());
  }
  return worst;
}

/// Reflection psi'(x') = gamma^mu psi(x), where x' keeps x_mu and negates
/// the other three coordinates. The momentum keeps p_mu and negates the
/// rest, so the result is again a plane-wave solution.
template <typename Scalar>
OnShellState<Scalar> apply_reflection(const OnShellState<Scalar>& state,
                                      int mu) {
  detail::check_index(mu, 4, "apply_reflection");
  OnShellState<Scalar> out = state;
  out.momentum = -state.momentum;
  out.momentum(mu) = state.momentum(mu);
  out.amplitude = gamma<Scalar>(mu) * state.amplitude;
  return out;
}

/// Coordinates seen by the reflected field: x' as defined above.
template <typename Derived>
FourVector<typename Derived::Scalar> reflect_coordinates(
    const Eigen::MatrixBase<Derived>& x, int mu) {
  detail::check_index(mu, 4, "reflect_coordinates");
  FourVector<typename Derived::Scalar> out = -x;
  out(mu) = x(mu);
  return out;
}

}  // namespace geomwave
