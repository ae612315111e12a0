#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "geomwave/clifford.hpp"
#include "geomwave/types.hpp"

namespace geomwave {

/// Riemann-Silberstein plane wave f+- = amp+- exp(i (k.x - omega t)).
template <typename Scalar = double>
struct RSPlaneWave {
  ComplexVector3<Scalar> f_plus_amp = ComplexVector3<Scalar>::Zero();
  ComplexVector3<Scalar> f_minus_amp = ComplexVector3<Scalar>::Zero();
  Vector3<Scalar> k = Vector3<Scalar>::Zero();
  Scalar omega{};
};

template <typename Scalar = double>
struct EMFieldSample {
  Vector3<Scalar> E;
  Vector3<Scalar> H;
  Vector3<Scalar> position;
  Scalar time{};
};

/// (E + iH, E - iH).
template <typename DerivedE, typename DerivedH,
          typename Scalar = typename DerivedE::Scalar>
std::pair<ComplexVector3<Scalar>, ComplexVector3<Scalar>> rs_from_EH(
    const Eigen::MatrixBase<DerivedE>& E,
    const Eigen::MatrixBase<DerivedH>& H) {
  const std::complex<Scalar> i(0, 1);
  const ComplexVector3<Scalar> e = E.template cast<std::complex<Scalar>>();
  const ComplexVector3<Scalar> h = H.template cast<std::complex<Scalar>>();
  return {e + i * h, e - i * h};
}

/// Inverse of rs_from_EH: E = (f+ + f-) / 2, H = (f+ - f-) / 2i. Only
/// meaningful when f- is the conjugate of f+.
template <typename Scalar>
std::pair<Vector3<Scalar>, Vector3<Scalar>> eh_from_rs(
    const ComplexVector3<Scalar>& f_plus,
    const ComplexVector3<Scalar>& f_minus) {
  const std::complex<Scalar> i(0, 1);
  const ComplexVector3<Scalar> e = (f_plus + f_minus) / Scalar(2);
  const ComplexVector3<Scalar> h = (f_plus - f_minus) / (Scalar(2) * i);
  return {e.real(), h.real()};
}

/// k_x S_x + k_y S_y + k_z S_z. Acting on v it gives i k x v.
template <typename Derived>
Matrix3c<typename Derived::Scalar> s_dot_k(
    const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  Matrix3c<Scalar> out = Matrix3c<Scalar>::Zero();
  for (int axis = 0; axis < 3; ++axis) {
    out += spin_matrix<Scalar>(axis) * std::complex<Scalar>(k(axis));
  }
  return out;
}

template <typename Scalar>
std::complex<Scalar> plane_wave_phase(const RSPlaneWave<Scalar>& w,
                                      const Vector3<Scalar>& x, Scalar t) {
  return std::polar(Scalar(1), w.k.dot(x) - w.omega * t);
}

/// Factors multiplying the field when d/dt and grad act on the exponential.
template <typename Scalar>
struct PlaneWaveDerivatives {
  std::complex<Scalar> d_t;                 // -i omega
  ComplexVector3<Scalar> grad;              // i k
  ComplexVector3<Scalar> momentum;          // -i grad = k

  explicit PlaneWaveDerivatives(const RSPlaneWave<Scalar>& w) {
    const std::complex<Scalar> i(0, 1);
    d_t = -i * w.omega;
    grad = i * w.k.template cast<std::complex<Scalar>>();
    momentum = -i * grad;
  }
};

template <typename Scalar>
Matrix3c<Scalar> s_dot(const ComplexVector3<Scalar>& p) {
  Matrix3c<Scalar> out = Matrix3c<Scalar>::Zero();
  for (int axis = 0; axis < 3; ++axis) out += spin_matrix<Scalar>(axis) * p(axis);
  return out;
}

/// Residuals of i df+/dt - (S.p) f+ and i df-/dt + (S.p) f-, p = -i grad.
template <typename Scalar>
std::pair<ComplexVector3<Scalar>, ComplexVector3<Scalar>> majorana_residual(
    const RSPlaneWave<Scalar>& w, const Vector3<Scalar>& x, Scalar t) {
  const std::complex<Scalar> i(0, 1);
  const PlaneWaveDerivatives<Scalar> d(w);
  const std::complex<Scalar> ph = plane_wave_phase(w, x, t);
  const ComplexVector3<Scalar> fp = w.f_plus_amp * ph;
  const ComplexVector3<Scalar> fm = w.f_minus_amp * ph;
  const Matrix3c<Scalar> sp = s_dot(d.momentum);
  return {i * d.d_t * fp - sp * fp, i * d.d_t * fm + sp * fm};
}

template <typename Scalar>
Scalar max_norm(const std::pair<ComplexVector3<Scalar>,
                                ComplexVector3<Scalar>>& residual) {
  return std::max(residual.first.norm(), residual.second.norm());
}

/// Unit-amplitude transverse wave along k: S.k_hat has eigenvalue +1 on
/// f+ and -1 on f-, omega = |k|. Each amplitude is rotated so its first
/// nonzero component is real and positive.
template <typename Derived>
RSPlaneWave<typename Derived::Scalar> solve_amplitudes(
    const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  using C = std::complex<Scalar>;
  const Scalar norm = k.norm();
  if (!(norm > Scalar(0))) {
    throw std::domain_error("solve_amplitudes: zero wave vector");
  }
  const Vector3<Scalar> k_hat = k / norm;

  Eigen::Index least = 0;
  k_hat.cwiseAbs().minCoeff(&least);
  Vector3<Scalar> e1 = Vector3<Scalar>::Unit(least);
  e1 = (e1 - e1.dot(k_hat) * k_hat).normalized();
  const Vector3<Scalar> e2 = k_hat.cross(e1);

  const C i(0, 1);
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  auto fix_phase = [](ComplexVector3<Scalar> v) {
    for (int n = 0; n < 3; ++n) {
      const Scalar mag = std::abs(v(n));
      if (mag > Scalar(1e-12)) {
        v *= std::conj(v(n)) / mag;
        v(n) = C(mag);
        break;
      }
    }
    return v;
  };

  RSPlaneWave<Scalar> w;
  const ComplexVector3<Scalar> c1 = e1.template cast<C>();
  const ComplexVector3<Scalar> c2 = e2.template cast<C>();
  w.f_plus_amp = fix_phase((c1 + i * c2) * inv_sqrt2);
  w.f_minus_amp = fix_phase((c1 - i * c2) * inv_sqrt2);
  w.k = k;
  w.omega = norm;
  return w;
}

/// Real fields E = Re f+, H = Im f+ at (x, t).
template <typename Scalar>
EMFieldSample<Scalar> field_sample(const RSPlaneWave<Scalar>& w,
                                   const Vector3<Scalar>& x, Scalar t) {
  const ComplexVector3<Scalar> f = w.f_plus_amp * plane_wave_phase(w, x, t);
  return {f.real(), f.imag(), x, t};
}

template <typename Scalar = double>
struct CurlFormResiduals {
  Vector3<Scalar> ampere;   // dE/dt - curl H
  Vector3<Scalar> faraday;  // dH/dt + curl E
  Scalar div_E{};
  Scalar div_H{};

  Scalar max_magnitude() const {
    using std::abs;
    return std::max({ampere.norm(), faraday.norm(), abs(div_E), abs(div_H)});
  }
};

/// Source-free Maxwell equations in curl form, evaluated on E = Re f+,
/// H = Im f+ with all derivatives applied to the exponential.
template <typename Scalar>
CurlFormResiduals<Scalar> curl_form_residuals(const RSPlaneWave<Scalar>& w,
                                              const Vector3<Scalar>& x,
                                              Scalar t) {
  const PlaneWaveDerivatives<Scalar> d(w);
  const ComplexVector3<Scalar> f = w.f_plus_amp * plane_wave_phase(w, x, t);
  // E and H are the real and imaginary parts of f; derivatives are real
  // operators so they commute with taking parts.
  const ComplexVector3<Scalar> dt_f = d.d_t * f;
  const ComplexVector3<Scalar> curl_f = cross_product(d.grad, f);
  const std::complex<Scalar> div_f = d.grad.transpose() * f;

  CurlFormResiduals<Scalar> r;
  r.ampere = dt_f.real() - curl_f.imag();
  r.faraday = dt_f.imag() + curl_f.real();
  r.div_E = div_f.real();
  r.div_H = div_f.imag();
  return r;
}

template <typename Scalar>
Scalar curl_form_residual(const RSPlaneWave<Scalar>& w,
                          const Vector3<Scalar>& x, Scalar t) {
  return curl_form_residuals(w, x, t).max_magnitude();
}

/// i Gamma^mu d_mu f on the stacked bivector f = (f+, f-).
template <typename Scalar>
ComplexVector6<Scalar> big_gamma_form_residual(const RSPlaneWave<Scalar>& w,
                                               const Vector3<Scalar>& x,
                                               Scalar t) {
  const std::complex<Scalar> i(0, 1);
  const PlaneWaveDerivatives<Scalar> d(w);
  const std::complex<Scalar> ph = plane_wave_phase(w, x, t);
  ComplexVector6<Scalar> f;
  f << w.f_plus_amp * ph, w.f_minus_amp * ph;

  Matrix6c<Scalar> op = big_gamma<Scalar>(0) * d.d_t;
  for (int j = 0; j < 3; ++j) op += big_gamma<Scalar>(j + 1) * d.grad(j);
  return i * (op * f);
}

/// Transversality k.f+ and k.f- (plain bilinear dot, no conjugation).
template <typename Scalar>
Scalar transversality_residual(const RSPlaneWave<Scalar>& w) {
  using std::abs;
  const ComplexVector3<Scalar> kc = w.k.template cast<std::complex<Scalar>>();
  const std::complex<Scalar> p = kc.transpose() * w.f_plus_amp;
  const std::complex<Scalar> m = kc.transpose() * w.f_minus_amp;
  return std::max(abs(p), abs(m));
}

/// alpha w1 + beta w2 for waves sharing k and omega.
template <typename Scalar>
RSPlaneWave<Scalar> superpose(const RSPlaneWave<Scalar>& w1,
                              const RSPlaneWave<Scalar>& w2,
                              std::complex<Scalar> alpha,
                              std::complex<Scalar> beta) {
  if (w1.k != w2.k || w1.omega != w2.omega) {
    throw std::invalid_argument("superpose: waves differ in k or omega");
  }
  RSPlaneWave<Scalar> out = w1;
  out.f_plus_amp = alpha * w1.f_plus_amp + beta * w2.f_plus_amp;
  out.f_minus_amp = alpha * w1.f_minus_amp + beta * w2.f_minus_amp;
  return out;
}

}  // namespace geomwave
