#include "pathtrans/expm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <complex>

namespace pathtrans {

namespace {

using cd = std::complex<double>;

// exp of a traceless 2x2 via Cayley-Hamilton: A^2 = theta^2 * I with
// theta^2 = a^2 + bc, so exp(A) = cosh(theta) I + sinhc(theta) A.
Eigen::Matrix2cd exp_traceless_2x2(const Eigen::Matrix2cd& a) {
  const cd theta2 = a(0, 0) * a(0, 0) + a(0, 1) * a(1, 0);
  cd ch, shc;
  if (std::abs(theta2) < 1e-12) {
    // series in theta^2; keeps t -> 0 and nilpotent arguments exact
    ch = 1.0 + theta2 / 2.0 + theta2 * theta2 / 24.0;
    shc = 1.0 + theta2 / 6.0 + theta2 * theta2 / 120.0;
  } else {
    const cd theta = std::sqrt(theta2);
    ch = std::cosh(theta);
    shc = std::sinh(theta) / theta;
  }
  return ch * Eigen::Matrix2cd::Identity() + shc * a;
}

}  // namespace

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& m) {
  const auto n = m.rows();
  if (n == 1) {
    Eigen::MatrixXcd r(1, 1);
    r(0, 0) = std::exp(m(0, 0));
    return r;
  }
  if (n == 2) {
    const cd mu = (m(0, 0) + m(1, 1)) / 2.0;
    Eigen::Matrix2cd a = m;
    a(0, 0) -= mu;
    a(1, 1) -= mu;
    return std::exp(mu) * exp_traceless_2x2(a);
  }
  return m.exp();
}

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace pathtrans
