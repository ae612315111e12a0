#include "geomwave/algebra_checks.hpp"

#include "geomwave/clifford.hpp"

namespace geomwave {

namespace {

template <typename DerivedA, typename DerivedB>
IdentityCheck compare(std::string name, std::vector<int> indices,
                      const Eigen::MatrixBase<DerivedA>& got,
                      const Eigen::MatrixBase<DerivedB>& want) {
  IdentityCheck c;
  c.name = std::move(name);
  c.indices = std::move(indices);
  c.max_deviation = (got - want).cwiseAbs().maxCoeff();
  c.pass = got == want;
  return c;
}

}  // namespace

std::vector<IdentityCheck> run_algebra_checks() {
  using C = std::complex<double>;
  const C i(0, 1);
  std::vector<IdentityCheck> out;

  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const double g = mu == nu ? MetricSignature<>::component(mu) : 0.0;
      out.push_back(compare("anticommutator_gamma", {mu, nu},
                            anticommutator(gamma(mu), gamma(nu)),
                            Matrix4c<>::Identity() * C(2.0 * g)));
    }
  }

  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Matrix3c<> want = Matrix3c<>::Zero();
      for (int c = 0; c < 3; ++c) {
        want += i * C(levi_civita(a, b, c)) * spin_matrix(c);
      }
      out.push_back(compare("commutator_spin", {a, b},
                            commutator(spin_matrix(a), spin_matrix(b)), want));
    }
  }

  for (int a = 0; a < 3; ++a) {
    const Matrix3c<> s = spin_matrix(a);
    out.push_back(compare("hermitian_spin", {a}, s.adjoint(), s));
  }
  out.push_back(
      compare("hermitian_gamma", {0}, gamma(0).adjoint(), gamma(0)));
  for (int k = 1; k < 4; ++k) {
    out.push_back(compare("antihermitian_gamma", {k}, gamma(k).adjoint(),
                          -gamma(k)));
  }

  for (int a = 0; a < 3; ++a) {
    const Matrix3c<> s = spin_matrix(a);
    out.push_back(compare("spin_cube", {a}, s * s * s, s));
  }

  const Matrix6c<> g0 = big_gamma(0);
  out.push_back(
      compare("big_gamma0_square", {0}, g0 * g0, Matrix6c<>::Identity()));
  return out;
}

}  // namespace geomwave
