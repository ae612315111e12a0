#pragma once

#include <stdexcept>
#include <string>

#include "geomwave/types.hpp"

namespace geomwave {

namespace detail {

inline void check_index(int index, int upper, const char* what) {
  if (index < 0 || index >= upper) {
    throw std::out_of_range(std::string(what) + " index " +
                            std::to_string(index) + " outside [0, " +
                            std::to_string(upper - 1) + "]");
  }
}

}  // namespace detail

/// Dirac-representation gamma matrix. mu = 0 is the time component.
///
/// gamma^0 = diag(1, 1, -1, -1); gamma^k = (0, sigma_k; -sigma_k, 0).
template <typename Scalar = double>
Matrix4c<Scalar> gamma(int mu) {
  detail::check_index(mu, 4, "gamma");
  using C = std::complex<Scalar>;
  const C one(1, 0);
  const C i(0, 1);
  Matrix4c<Scalar> g = Matrix4c<Scalar>::Zero();
  switch (mu) {
    case 0:
      g.diagonal() << one, one, -one, -one;
      break;
    case 1:
      g(0, 3) = one;
      g(1, 2) = one;
      g(2, 1) = -one;
      g(3, 0) = -one;
      break;
    case 2:
      g(0, 3) = -i;
      g(1, 2) = i;
      g(2, 1) = i;
      g(3, 0) = -i;
      break;
    case 3:
      g(0, 2) = one;
      g(1, 3) = -one;
      g(2, 0) = -one;
      g(3, 1) = one;
      break;
  }
  return g;
}

/// Spin-1 matrices of the Majorana form of Maxwell's equations,
/// (S_k)_{jl} = -i epsilon_{kjl}.
template <typename Scalar = double>
Matrix3c<Scalar> spin_matrix(int axis) {
  detail::check_index(axis, 3, "spin_matrix");
  const std::complex<Scalar> i(0, 1);
  Matrix3c<Scalar> s = Matrix3c<Scalar>::Zero();
  switch (axis) {
    case 0:
      s(1, 2) = -i;
      s(2, 1) = i;
      break;
    case 1:
      s(0, 2) = i;
      s(2, 0) = -i;
      break;
    case 2:
      s(0, 1) = -i;
      s(1, 0) = i;
      break;
  }
  return s;
}

/// 6x6 block matrices acting on the stacked (f+, f-) bivector.
/// Gamma^0 = (0, 1; 1, 0); Gamma^k = (0, -S_k; S_k, 0).
template <typename Scalar = double>
Matrix6c<Scalar> big_gamma(int mu) {
  detail::check_index(mu, 4, "big_gamma");
  Matrix6c<Scalar> g = Matrix6c<Scalar>::Zero();
  if (mu == 0) {
    g.template topRightCorner<3, 3>().setIdentity();
    g.template bottomLeftCorner<3, 3>().setIdentity();
  } else {
    const Matrix3c<Scalar> s = spin_matrix<Scalar>(mu - 1);
    g.template topRightCorner<3, 3>() = -s;
    g.template bottomLeftCorner<3, 3>() = s;
  }
  return g;
}

template <typename DerivedA, typename DerivedB>
void check_same_shape(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("matrix dimension mismatch: " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

/// {A, B} = AB + BA.
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject anticommutator(
    const Eigen::MatrixBase<DerivedA>& a,
    const Eigen::MatrixBase<DerivedB>& b) {
  check_same_shape(a, b);
  return a * b + b * a;
}

/// [A, B] = AB - BA.
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(
    const Eigen::MatrixBase<DerivedA>& a,
    const Eigen::MatrixBase<DerivedB>& b) {
  check_same_shape(a, b);
  return a * b - b * a;
}

/// Levi-Civita symbol on {0, 1, 2}.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

/// gamma^mu p_mu for a contravariant four-vector p = (E, px, py, pz).
template <typename Derived>
Matrix4c<typename Derived::Scalar> feynman_slash(
    const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  Matrix4c<Scalar> out = gamma<Scalar>(0) * std::complex<Scalar>(p(0));
  for (int k = 1; k < 4; ++k) {
    out -= gamma<Scalar>(k) * std::complex<Scalar>(p(k));
  }
  return out;
}

}  // namespace geomwave
