#pragma once

#include <Eigen/Dense>

namespace pathtrans {

/// Matrix exponential. 1x1 and 2x2 arguments are evaluated in closed form
/// (the integrator multiplies thousands of these per transport); larger
/// matrices fall back to scaling-and-squaring Pade.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& m);

/// Nearest unitary factor of an invertible matrix (polar projection).
Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& m);

}  // namespace pathtrans
