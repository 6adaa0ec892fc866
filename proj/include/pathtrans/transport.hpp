#pragma once

#include <Eigen/Dense>
#include <functional>

#include "pathtrans/path.hpp"

namespace pathtrans {

/// The matrix of a fibre map attached to one parameter pair of a path:
/// carries vectors sitting over gamma(source_param) to vectors over
/// gamma(target_param), in a frame fixed along the path.
struct TransportMatrix {
  double source_param = 0.0;
  double target_param = 0.0;
  Eigen::MatrixXcd matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// A transport family: for a path gamma and parameters s, t in its domain,
/// produces the matrix carrying the fibre at gamma(s) to the fibre at
/// gamma(t). Resolvers must be pure functions of (gamma, s, t).
struct TransportFamily {
  int fibre_dim = 0;
  std::function<Eigen::MatrixXcd(const Path&, double, double)> resolver;

  TransportMatrix operator()(const Path& gamma, double s, double t) const;
};

/// Chain two transports along the same path: the result carries
/// first.source_param to second.target_param. Parameter junction must match.
TransportMatrix compose(const TransportMatrix& second,
                        const TransportMatrix& first);

/// The reverse transport: swaps the parameters and inverts the matrix.
/// Throws NumericalError when the matrix is singular beyond conditioning.
TransportMatrix invert(const TransportMatrix& m);

/// Apply the transport to a fibre vector.
Eigen::VectorXcd apply(const TransportMatrix& m, const Eigen::VectorXcd& v);

/// Matrix inverse with a conditioning guard shared by the whole library.
Eigen::MatrixXcd guarded_inverse(const Eigen::MatrixXcd& m,
                                 double max_condition = 1e12);

}  // namespace pathtrans
