#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "geomwave/maxwell.hpp"
#include "geomwave/random.hpp"

using namespace geomwave;
using C = std::complex<double>;

namespace {

const C kI(0, 1);

Vector3<double> random_unit(CounterRng& rng) {
  const double z = rng.uniform(-1, 1);
  const double phi = rng.uniform(0, 2 * std::numbers::pi);
  const double r = std::sqrt(1 - z * z);
  return {r * std::cos(phi), r * std::sin(phi), z};
}

RSPlaneWave<double> detuned(RSPlaneWave<double> w, double delta) {
  w.omega += delta;
  return w;
}

// Helicity eigenvector from a dense Hermitian eigen-solver.
ComplexVector3<double> eigen_helicity(const Vector3<double>& k, double value) {
  Eigen::SelfAdjointEigenSolver<Matrix3c<>> es(s_dot_k(k.normalized()));
  Eigen::Index idx = 0;
  (es.eigenvalues().array() - value).abs().minCoeff(&idx);
  return es.eigenvectors().col(idx);
}

// Finite-difference curl-form residual on E = Re f+, H = Im f+.
double fd_curl_residual(const RSPlaneWave<double>& w, const Vector3<double>& x,
                        double t) {
  const double h = 1e-5;
  auto E = [&](const Vector3<double>& y, double s) {
    return field_sample(w, y, s).E;
  };
  auto H = [&](const Vector3<double>& y, double s) {
    return field_sample(w, y, s).H;
  };
  Eigen::Matrix3d dE, dH;  // column j = d/dx_j
  for (int j = 0; j < 3; ++j) {
    const Vector3<double> e = Vector3<double>::Unit(j) * h;
    dE.col(j) = (E(x + e, t) - E(x - e, t)) / (2 * h);
    dH.col(j) = (H(x + e, t) - H(x - e, t)) / (2 * h);
  }
  auto curl = [](const Eigen::Matrix3d& d) {
    return Vector3<double>(d(2, 1) - d(1, 2), d(0, 2) - d(2, 0),
                           d(1, 0) - d(0, 1));
  };
  const Vector3<double> dtE = (E(x, t + h) - E(x, t - h)) / (2 * h);
  const Vector3<double> dtH = (H(x, t + h) - H(x, t - h)) / (2 * h);
  return std::max({(dtE - curl(dH)).norm(), (dtH + curl(dE)).norm(),
                   std::abs(dE.trace()), std::abs(dH.trace())});
}

}  // namespace

TEST_CASE("Riemann-Silberstein vectors") {
  auto [fp, fm] = rs_from_EH(Vector3<double>(1, 0, 0), Vector3<double>::Zero());
  CHECK(fp == ComplexVector3<double>(1, 0, 0));
  CHECK(fm == ComplexVector3<double>(1, 0, 0));
  std::tie(fp, fm) = rs_from_EH(Vector3<double>::Zero(), Vector3<double>(0, 1, 0));
  CHECK(fp == ComplexVector3<double>(0, kI, 0));
  CHECK(fm == ComplexVector3<double>(0, -kI, 0));

  const Vector3<double> E(0.3, -1.25, 2.5), H(-4, 0.125, 7);
  std::tie(fp, fm) = rs_from_EH(E, H);
  CHECK(fm == fp.conjugate());
  const auto [e2, h2] = eh_from_rs(fp, fm);
  CHECK(e2 == E);
  CHECK(h2 == H);
  CHECK(fp.real() == E);
  CHECK(fp.imag() == H);
}

TEST_CASE("s_dot_k") {
  CHECK(s_dot_k(Vector3<double>(0, 0, 1)) == spin_matrix(2));
  CHECK(s_dot_k(Vector3<double>::Zero()).isZero(0));
  CounterRng rng(3);
  for (int n = 0; n < 50; ++n) {
    const Vector3<double> k(rng.uniform(-3, 3), rng.uniform(-3, 3),
                            rng.uniform(-3, 3));
    const ComplexVector3<double> kc = k.cast<C>();
    CHECK((s_dot_k(k) * kc).norm() < 1e-14);
    // (S.k) v = i k x v
    const ComplexVector3<double> v(C(1, 2), C(-0.5, 0.25), C(3, -1));
    CHECK((s_dot_k(k) * v - kI * cross_product(kc, v)).norm() < 1e-13);
  }
}

TEST_CASE("majorana residual on circular polarizations") {
  RSPlaneWave<double> w;
  w.k = Vector3<double>(0, 0, 1);
  w.omega = 1;
  w.f_plus_amp = ComplexVector3<double>(1, kI, 0) / std::sqrt(2.0);
  w.f_minus_amp = ComplexVector3<double>(1, -kI, 0) / std::sqrt(2.0);
  const Vector3<double> x(0.3, -0.7, 1.1);
  const auto [rp, rm] = majorana_residual(w, x, 0.25);
  CHECK(rp.norm() < 1e-12);
  CHECK(rm.norm() < 1e-12);

  RSPlaneWave<double> zero;
  zero.k = w.k;
  zero.omega = 1;
  CHECK(max_norm(majorana_residual(zero, x, 0.25)) == 0.0);
  CHECK(curl_form_residual(zero, x, 0.25) == 0.0);
  CHECK(big_gamma_form_residual(zero, x, 0.25).isZero(0));
}

TEST_CASE("solve_amplitudes") {
  const auto w = solve_amplitudes(Vector3<double>(0, 0, 1));
  CHECK((w.f_plus_amp - ComplexVector3<double>(1, kI, 0) / std::sqrt(2.0))
            .norm() < 1e-15);
  CHECK((w.f_minus_amp - ComplexVector3<double>(1, -kI, 0) / std::sqrt(2.0))
            .norm() < 1e-15);
  CHECK(w.omega == 1.0);

  // Matches the eigen-solver's +1 eigenvector up to a phase.
  const ComplexVector3<double> ev = eigen_helicity(Vector3<double>(0, 0, 1), 1);
  CHECK(std::abs(std::abs(ev.dot(w.f_plus_amp)) - 1.0) < 1e-14);

  const auto w2 = solve_amplitudes(Vector3<double>(0, 0, 2));
  CHECK(w2.omega == 2.0);
  CHECK((w2.f_plus_amp - w.f_plus_amp).norm() < 1e-15);

  CHECK_THROWS_AS(solve_amplitudes(Vector3<double>::Zero()), std::domain_error);

  CounterRng rng(21);
  for (int n = 0; n < 100; ++n) {
    const Vector3<double> k = random_unit(rng) * rng.uniform(0.1, 10);
    const auto wave = solve_amplitudes(k);
    CHECK(wave.omega == k.norm());
    CHECK(wave.f_plus_amp.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wave.f_minus_amp.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(transversality_residual(wave) < 1e-12);

    // Phase convention: first nonzero component is real and positive.
    for (const auto* amp : {&wave.f_plus_amp, &wave.f_minus_amp}) {
      for (int c = 0; c < 3; ++c) {
        if (std::abs((*amp)(c)) > 1e-12) {
          CHECK((*amp)(c).imag() == 0.0);
          CHECK((*amp)(c).real() > 0.0);
          break;
        }
      }
    }

    const ComplexVector3<double> plus = eigen_helicity(k, 1);
    const ComplexVector3<double> minus = eigen_helicity(k, -1);
    CHECK(std::abs(std::abs(plus.dot(wave.f_plus_amp)) - 1) < 1e-12);
    CHECK(std::abs(std::abs(minus.dot(wave.f_minus_amp)) - 1) < 1e-12);

    for (int p = 0; p < 20; ++p) {
      const Vector3<double> x(rng.uniform(-5, 5), rng.uniform(-5, 5),
                              rng.uniform(-5, 5));
      const double t = rng.uniform(-5, 5);
      CHECK(max_norm(majorana_residual(wave, x, t)) < 1e-12);
      CHECK(curl_form_residual(wave, x, t) < 1e-12);
      CHECK(big_gamma_form_residual(wave, x, t).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("helicity spectrum is {-1, 0, +1} with k_hat as the null vector") {
  CounterRng rng(55);
  for (int n = 0; n < 100; ++n) {
    const Vector3<double> k = random_unit(rng);
    Eigen::SelfAdjointEigenSolver<Matrix3c<>> es(s_dot_k(k));
    CHECK(std::abs(es.eigenvalues()(0) + 1) < 1e-12);
    CHECK(std::abs(es.eigenvalues()(1)) < 1e-12);
    CHECK(std::abs(es.eigenvalues()(2) - 1) < 1e-12);
    const ComplexVector3<double> null = es.eigenvectors().col(1);
    CHECK(std::abs(std::abs(null.dot(k.cast<C>())) - 1) < 1e-12);
  }
}

TEST_CASE("curl form matches a finite-difference oracle") {
  const auto w = solve_amplitudes(Vector3<double>(0.4, -0.3, 0.8));
  const Vector3<double> x(0.3, -0.7, 1.1);
  CHECK(curl_form_residual(w, x, 0.25) < 1e-12);
  CHECK(fd_curl_residual(w, x, 0.25) < 1e-7);

  const auto bad = detuned(w, 0.5);
  CHECK(std::abs(fd_curl_residual(bad, x, 0.25) -
                 curl_form_residual(bad, x, 0.25)) < 1e-7);
}

TEST_CASE("dispersion violation is detected and scales linearly") {
  const auto w = solve_amplitudes(Vector3<double>(0, 0, 1));
  const Vector3<double> x(0.3, -0.7, 1.1);
  const double t = 0.25;
  auto doubled = w;
  doubled.omega = 2 * w.k.norm();
  CHECK(curl_form_residual(doubled, x, t) >= 0.1);
  CHECK(max_norm(majorana_residual(doubled, x, t)) >= 0.1);
  CHECK(big_gamma_form_residual(doubled, x, t).cwiseAbs().maxCoeff() >= 0.1);

  CounterRng rng(6);
  for (int n = 0; n < 20; ++n) {
    const auto wave = solve_amplitudes(random_unit(rng) * rng.uniform(0.5, 5));
    const Vector3<double> y(rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5));
    const double s = rng.uniform(-5, 5);
    const double base_m = max_norm(majorana_residual(detuned(wave, 1e-3), y, s));
    const double base_c = curl_form_residual(detuned(wave, 1e-3), y, s);
    const double base_g =
        big_gamma_form_residual(detuned(wave, 1e-3), y, s).norm();
    for (double delta : {1e-2, 1e-1}) {
      const double ratio = delta / 1e-3;
      const auto d = detuned(wave, delta);
      CHECK(max_norm(majorana_residual(d, y, s)) / base_m ==
            doctest::Approx(ratio).epsilon(0.1));
      CHECK(curl_form_residual(d, y, s) / base_c ==
            doctest::Approx(ratio).epsilon(0.1));
      CHECK(big_gamma_form_residual(d, y, s).norm() / base_g ==
            doctest::Approx(ratio).epsilon(0.1));
    }
  }
}

TEST_CASE("swapped helicity in f- breaks the block form") {
  auto w = solve_amplitudes(Vector3<double>(0, 0, 1));
  w.f_minus_amp = w.f_plus_amp;
  const Vector3<double> x(0.1, 0.2, 0.3);
  CHECK(big_gamma_form_residual(w, x, 0.4).cwiseAbs().maxCoeff() >= 0.1);
  const auto [rp, rm] = majorana_residual(w, x, 0.4);
  CHECK(rp.norm() < 1e-12);
  CHECK(rm.norm() >= 0.1);
}

TEST_CASE("block form stacks the two Majorana equations") {
  CounterRng rng(90);
  for (int n = 0; n < 20; ++n) {
    RSPlaneWave<double> w;
    w.k = random_unit(rng) * 2.0;
    w.omega = rng.uniform(0.5, 3);
    for (int c = 0; c < 3; ++c) {
      w.f_plus_amp(c) = C(rng.uniform(-1, 1), rng.uniform(-1, 1));
      w.f_minus_amp(c) = C(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    const Vector3<double> x(rng.uniform(-1, 1), rng.uniform(-1, 1),
                            rng.uniform(-1, 1));
    const auto [rp, rm] = majorana_residual(w, x, 0.7);
    const ComplexVector6<double> g = big_gamma_form_residual(w, x, 0.7);
    CHECK((g.head<3>() - rm).norm() < 1e-13);
    CHECK((g.tail<3>() - rp).norm() < 1e-13);
  }
}

TEST_CASE("residual operators are linear") {
  const Vector3<double> k(0.2, -0.9, 0.5);
  const auto w1 = solve_amplitudes(k);
  auto w2 = w1;
  w2.f_plus_amp = ComplexVector3<double>(C(1, 2), C(0, -1), C(0.5, 0));
  w2.f_minus_amp = ComplexVector3<double>(C(-1, 0), C(2, 1), C(0, 3));
  const C alpha(0.7, -0.2), beta(-1.3, 0.4);
  const auto combo = superpose(w1, w2, alpha, beta);
  const Vector3<double> x(1.5, -0.5, 2.0);
  const double t = -0.8;

  const auto m1 = majorana_residual(w1, x, t);
  const auto m2 = majorana_residual(w2, x, t);
  const auto mc = majorana_residual(combo, x, t);
  CHECK((mc.first - (alpha * m1.first + beta * m2.first)).norm() < 1e-12);
  CHECK((mc.second - (alpha * m1.second + beta * m2.second)).norm() < 1e-12);

  const auto g1 = big_gamma_form_residual(w1, x, t);
  const auto g2 = big_gamma_form_residual(w2, x, t);
  CHECK((big_gamma_form_residual(combo, x, t) - (alpha * g1 + beta * g2))
            .norm() < 1e-12);

  // Curl form: real fields, so linear over real coefficients.
  const auto real_combo = superpose(w1, w2, C(0.6), C(-2.0));
  const auto c1 = curl_form_residuals(w1, x, t);
  const auto c2 = curl_form_residuals(w2, x, t);
  const auto cc = curl_form_residuals(real_combo, x, t);
  CHECK((cc.ampere - (0.6 * c1.ampere - 2.0 * c2.ampere)).norm() < 1e-12);
  CHECK((cc.faraday - (0.6 * c1.faraday - 2.0 * c2.faraday)).norm() < 1e-12);
  CHECK(std::abs(cc.div_E - (0.6 * c1.div_E - 2.0 * c2.div_E)) < 1e-12);

  auto other_k = w2;
  other_k.k = Vector3<double>(1, 0, 0);
  CHECK_THROWS_AS(superpose(w1, other_k, alpha, beta), std::invalid_argument);
}

TEST_CASE("masslessness and time periodicity") {
  CounterRng rng(1);
  for (int n = 0; n < 20; ++n) {
    const auto w = solve_amplitudes(random_unit(rng) * rng.uniform(0.1, 10));
    CHECK(2 * std::numbers::pi / w.omega == 2 * std::numbers::pi / w.k.norm());
    const Vector3<double> x(0.5, 0.5, 0.5);
    const double period = 2 * std::numbers::pi / w.omega;
    const auto a = field_sample(w, x, 0.3);
    const auto b = field_sample(w, x, 0.3 + 3 * period);
    CHECK((a.E - b.E).norm() < 1e-12);
    CHECK((a.H - b.H).norm() < 1e-12);
  }
}

TEST_CASE("waves built from real fields have conjugate f-") {
  const auto w = solve_amplitudes(Vector3<double>(0.3, 0.4, 0.0));
  const auto s = field_sample(w, Vector3<double>(1, 2, 3), 0.5);
  const auto [fp, fm] = rs_from_EH(s.E, s.H);
  CHECK((fm - fp.conjugate()).norm() == 0.0);
  CHECK((fp - w.f_plus_amp * plane_wave_phase(w, Vector3<double>(1, 2, 3), 0.5))
            .norm() < 1e-15);
}
