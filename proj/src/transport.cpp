#include "pathtrans/transport.hpp"

#include <cmath>

#include "pathtrans/errors.hpp"

namespace pathtrans {

TransportMatrix TransportFamily::operator()(const Path& gamma, double s,
                                            double t) const {
  if (!resolver) throw DomainError("transport family has no resolver");
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }
  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  m.matrix = resolver(gamma, s, t);
  if (!m.matrix.allFinite()) {
    throw NumericalError("transport resolver produced non-finite entries");
  }
  return m;
}

TransportMatrix compose(const TransportMatrix& second,
                        const TransportMatrix& first) {
  if (std::abs(first.target_param - second.source_param) > 1e-12) {
    throw DomainError("composition junction mismatch: first ends at " +
                      std::to_string(first.target_param) +
                      ", second starts at " +
                      std::to_string(second.source_param));
  }
  if (first.dim() != second.dim()) {
    throw DomainError("composition of transports with different fibre dims");
  }
  TransportMatrix r;
  r.source_param = first.source_param;
  r.target_param = second.target_param;
  r.matrix = second.matrix * first.matrix;
  return r;
}

Eigen::MatrixXcd guarded_inverse(const Eigen::MatrixXcd& m,
                                 double max_condition) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || !std::isfinite(smax) || smax / smin > max_condition) {
    throw NumericalError("matrix is singular beyond the conditioning threshold");
  }
  return m.inverse();
}

TransportMatrix invert(const TransportMatrix& m) {
  TransportMatrix r;
  r.source_param = m.target_param;
  r.target_param = m.source_param;
  r.matrix = guarded_inverse(m.matrix);
  return r;
}

Eigen::VectorXcd apply(const TransportMatrix& m, const Eigen::VectorXcd& v) {
  if (v.size() != m.dim()) {
    throw DomainError("fibre vector dimension does not match the transport");
  }
  return m.matrix * v;
}

}  // namespace pathtrans
