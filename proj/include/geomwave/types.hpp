#pragma once

#include <complex>

#include <Eigen/Dense>

namespace geomwave {

// Index 0 is time throughout; spatial axes are 1..3.
template <typename Scalar = double>
using FourVector = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar = double>
using Bispinor = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

template <typename Scalar = double>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar = double>
using ComplexVector3 = Eigen::Matrix<std::complex<Scalar>, 3, 1>;

template <typename Scalar = double>
using ComplexVector6 = Eigen::Matrix<std::complex<Scalar>, 6, 1>;

template <typename Scalar, int Dim>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Dim, Dim>;

template <typename Scalar = double>
using Matrix3c = ComplexMatrix<Scalar, 3>;
template <typename Scalar = double>
using Matrix4c = ComplexMatrix<Scalar, 4>;
template <typename Scalar = double>
using Matrix6c = ComplexMatrix<Scalar, 6>;

/// Minkowski metric with signature (+, -, -, -).
template <typename Scalar = double>
struct MetricSignature {
  static constexpr Scalar diag[4] = {Scalar(1), Scalar(-1), Scalar(-1),
                                     Scalar(-1)};

  static constexpr Scalar component(int mu) { return diag[mu]; }

  static Eigen::Matrix<Scalar, 4, 4> matrix() {
    return FourVector<Scalar>(diag[0], diag[1], diag[2], diag[3]).asDiagonal();
  }
};

/// a x b without conjugation (Eigen's cross conjugates complex results).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, 3, 1> cross_product(
    const Eigen::MatrixBase<DerivedA>& a,
    const Eigen::MatrixBase<DerivedB>& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
          a(0) * b(1) - a(1) * b(0)};
}

/// g(a, b) = a0 b0 - a1 b1 - a2 b2 - a3 b3.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar minkowski_dot(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

}  // namespace geomwave
