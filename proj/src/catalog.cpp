#include "pathtrans/catalog.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "pathtrans/errors.hpp"

namespace pathtrans {

namespace {

using cd = std::complex<double>;
const cd kI(0.0, 1.0);

/// Ordered product of straight-piece exponentials of a constant potential:
/// exact for any piecewise-straight path. H(t,s) multiplies the pieces in
/// traversal order; t < s returns the inverse of the forward transport.
Eigen::MatrixXcd piecewise_exponential(const Path& path,
                                       const std::vector<Eigen::MatrixXcd>& a,
                                       double s, double t) {
  if (t < s) return piecewise_exponential(path, a, t, s).inverse().eval();
  const int n = static_cast<int>(a.front().rows());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  if (t == s) return acc;

  std::vector<double> cuts{s};
  for (double j : path.junctions())
    if (j > s && j < t) cuts.push_back(j);
  cuts.push_back(t);
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Eigen::VectorXd dx = path.point(cuts[k + 1]) - path.point(cuts[k]);
    Eigen::MatrixXcd exponent = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < dx.size(); ++i) exponent += a[static_cast<size_t>(i)] * dx[i];
    acc = exponent.exp() * acc;
  }
  return acc;
}

}  // namespace

const NamedPath& CatalogEntry::path_named(const std::string& path_name) const {
  for (const auto& np : paths)
    if (np.name == path_name) return np;
  throw DomainError("catalog entry '" + name + "' has no path named '" +
                    path_name + "'");
}

CatalogEntry flat() {
  CatalogEntry e;
  e.name = "flat";
  e.fibre_dim = 2;
  e.connection = pullback_field(2, 2, [](const Eigen::VectorXd&) {
    return std::vector<Eigen::MatrixXcd>{Eigen::MatrixXcd::Zero(2, 2),
                                         Eigen::MatrixXcd::Zero(2, 2)};
  });
  e.paths = {
      {"line", line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1))},
      {"circle", circle_path(Eigen::Vector2d(0, 0), 1.0)},
  };
  e.oracle = [](const NamedPath&, double, double) {
    return Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(2, 2));
  };
  e.canonical_pair = {
      NamedPath{"leg-x", line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0))},
      NamedPath{"leg-y", line_path(Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1))},
  };
  return e;
}

CatalogEntry constant_gamma(const Eigen::MatrixXcd& g0) {
  if (!g0.allFinite() || g0.rows() != g0.cols()) {
    throw DomainError("constant coefficients must be a finite square matrix");
  }
  const int n = static_cast<int>(g0.rows());
  Eigen::MatrixXcd g = g0;

  CatalogEntry e;
  e.name = "constant_gamma";
  e.fibre_dim = n;
  e.connection = pullback_field(n, 1, [g](const Eigen::VectorXd&) {
    return std::vector<Eigen::MatrixXcd>{g};
  });
  Eigen::VectorXd x0(1), x1(1);
  x0 << 0.0;
  x1 << 1.0;
  e.paths = {{"unit-line", line_path(x0, x1)}};
  e.oracle = [g](const NamedPath&, double s, double t) {
    return Eigen::MatrixXcd((-(t - s) * g).exp());
  };
  Eigen::VectorXd xm(1);
  xm << 0.5;
  e.canonical_pair = {NamedPath{"first-half", line_path(x0, xm)},
                      NamedPath{"second-half", line_path(xm, x1)}};
  return e;
}

CatalogEntry sphere_levi_civita(double theta0) {
  if (!(theta0 > 0.0 && theta0 < EIGEN_PI) || std::sin(theta0) < 1e-9) {
    throw DomainError("latitude must avoid the poles: theta0 in (0, pi)");
  }

  CatalogEntry e;
  e.name = "sphere_levi_civita";
  e.fibre_dim = 2;
  e.connection = pullback_field(2, 2, [](const Eigen::VectorXd& x) {
    const double theta = x[0];
    const double sn = std::sin(theta);
    if (std::abs(sn) < 1e-12) {
      throw NumericalError("sphere chart breaks down at the poles");
    }
    const double cot = std::cos(theta) / sn;
    Eigen::MatrixXcd a_theta = Eigen::MatrixXcd::Zero(2, 2);
    a_theta(1, 1) = cot;
    Eigen::MatrixXcd a_phi = Eigen::MatrixXcd::Zero(2, 2);
    a_phi(0, 1) = -sn * std::cos(theta);
    a_phi(1, 0) = cot;
    return std::vector<Eigen::MatrixXcd>{a_theta, a_phi};
  });
  e.paths = {
      {"latitude", latitude_path(theta0)},
      {"quarter-latitude", latitude_path(theta0, {0.0, EIGEN_PI / 2.0})},
  };
  // Along a latitude the coefficient matrix G is constant with
  // G^2 = -cos(theta0)^2 id, so exp(-u G) = cos(wu) id - sin(wu)/w G.
  e.oracle = [theta0](const NamedPath&, double s, double t) {
    const double w = std::cos(theta0);
    const double u = t - s;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
    if (w == 0.0) return h;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(2, 2);
    g(0, 1) = -std::sin(theta0) * std::cos(theta0);
    g(1, 0) = std::cos(theta0) / std::sin(theta0);
    h = std::cos(w * u) * Eigen::MatrixXcd::Identity(2, 2) -
        (std::sin(w * u) / w) * g;
    return h;
  };
  e.canonical_pair = {
      NamedPath{"east-half", line_path(Eigen::Vector2d(theta0, 0),
                                       Eigen::Vector2d(theta0, EIGEN_PI))},
      NamedPath{"west-half", line_path(Eigen::Vector2d(theta0, EIGEN_PI),
                                       Eigen::Vector2d(theta0, 2 * EIGEN_PI))},
  };
  return e;
}

CatalogEntry u1_uniform(double b) {
  CatalogEntry e;
  e.name = "u1_uniform";
  e.fibre_dim = 1;

  GaugePotential pot;
  pot.group = Group::U1;
  pot.fibre_dim = 1;
  pot.chart_dim = 2;
  pot.components = [b](const Eigen::VectorXd& x) {
    Eigen::MatrixXcd ax(1, 1), ay(1, 1);
    ax(0, 0) = -kI * b * x[1] / 2.0;
    ay(0, 0) = kI * b * x[0] / 2.0;
    return std::vector<Eigen::MatrixXcd>{ax, ay};
  };
  e.potential = pot;
  e.connection = pot.connection();

  e.paths = {{"circle", circle_path(Eigen::Vector2d(0, 0), 1.0)}};
  // Around the origin-centered unit circle the pulled-back coefficient is the
  // constant -i b / 2, so the transport over a longitude span is a pure phase.
  e.oracle = [b](const NamedPath&, double s, double t) {
    Eigen::MatrixXcd h(1, 1);
    h(0, 0) = std::exp(kI * b * (t - s) / 2.0);
    return h;
  };

  const Path full = circle_path(Eigen::Vector2d(0, 0), 1.0);
  e.canonical_pair = {
      NamedPath{"upper-arc",
                reparameterize(restrict(full, {0.0, EIGEN_PI}),
                               affine_reparam({0.0, 1.0}, {0.0, EIGEN_PI}))},
      NamedPath{"lower-arc",
                reparameterize(restrict(full, {EIGEN_PI, 2 * EIGEN_PI}),
                               affine_reparam({0.0, 1.0},
                                              {EIGEN_PI, 2 * EIGEN_PI}))},
  };
  return e;
}

CatalogEntry su2_constant(const Eigen::Vector3d& a) {
  CatalogEntry e;
  e.name = "su2_constant";
  e.fibre_dim = 2;

  std::vector<Eigen::MatrixXcd> comps(3, Eigen::MatrixXcd::Zero(2, 2));
  // i sigma_k / 2, scaled by a_k
  comps[0](0, 1) = kI * a[0] / 2.0;
  comps[0](1, 0) = kI * a[0] / 2.0;
  comps[1](0, 1) = a[1] / 2.0;
  comps[1](1, 0) = -a[1] / 2.0;
  comps[2](0, 0) = kI * a[2] / 2.0;
  comps[2](1, 1) = -kI * a[2] / 2.0;

  GaugePotential pot;
  pot.group = Group::SU2;
  pot.fibre_dim = 2;
  pot.chart_dim = 3;
  pot.components = [comps](const Eigen::VectorXd&) { return comps; };
  e.potential = pot;
  e.connection = pot.connection();

  const Eigen::Vector3d o(0, 0, 0), ex(1, 0, 0), exy(1, 1, 0), ey(0, 1, 0);
  e.paths = {
      {"segment-x", line_path(o, ex)},
      {"bent-polyline", polyline_path({o, ex, exy})},
      {"square-loop", polyline_path({o, ex, exy, ey, o})},
  };
  e.oracle = [comps](const NamedPath& np, double s, double t) {
    return piecewise_exponential(np.path, comps, s, t);
  };
  e.canonical_pair = {NamedPath{"segment-x", line_path(o, ex)},
                      NamedPath{"segment-y", line_path(ex, exy)}};
  return e;
}

std::vector<CatalogEntry> standard_catalog() {
  Eigen::MatrixXcd g0(2, 2);
  g0 << 0.3, 1.0, 0.0, -0.2;
  return {
      flat(),
      constant_gamma(g0),
      sphere_levi_civita(EIGEN_PI / 3.0),
      u1_uniform(EIGEN_PI),
      su2_constant(Eigen::Vector3d(1.2, 0.9, 0.5)),
  };
}

double fold_angle(double angle) {
  double r = std::fmod(std::abs(angle), 2.0 * EIGEN_PI);
  if (r > EIGEN_PI) r = 2.0 * EIGEN_PI - r;
  return r;
}

double latitude_rotation_angle(const Eigen::MatrixXcd& h, double theta0) {
  if (h.imag().norm() > 1e-9 * (1.0 + h.real().norm())) {
    throw NumericalError("latitude transport should be a real matrix");
  }
  const double sn = std::sin(theta0);
  Eigen::Matrix2d scale = Eigen::Matrix2d::Identity();
  scale(1, 1) = sn;
  const Eigen::Matrix2d r = scale * h.real() * scale.inverse();
  return std::abs(std::atan2(r(1, 0) - r(0, 1), r(0, 0) + r(1, 1)));
}

double latitude_arc_angle(double theta0, double span) {
  return fold_angle(span * std::cos(theta0));
}

TransportFamily mock_parameter_clock(const Eigen::MatrixXcd& g0) {
  Eigen::MatrixXcd g = g0;
  TransportFamily fam;
  fam.fibre_dim = static_cast<int>(g0.rows());
  fam.resolver = [g](const Path&, double s, double t) {
    return Eigen::MatrixXcd((-(t - s) * g).exp());
  };
  return fam;
}

TransportFamily mock_domain_length(const Eigen::MatrixXcd& g0) {
  Eigen::MatrixXcd g = g0;
  TransportFamily fam;
  fam.fibre_dim = static_cast<int>(g0.rows());
  fam.resolver = [g](const Path& gamma, double s, double t) {
    return Eigen::MatrixXcd(
        (-(t - s) * gamma.domain().length() * g).exp());
  };
  return fam;
}

ParallelTransportRule mock_rule_domain_length(const Eigen::MatrixXcd& g0) {
  Eigen::MatrixXcd g = g0;
  ParallelTransportRule rule;
  rule.fibre_dim = static_cast<int>(g0.rows());
  rule.assign = [g](const Path& gamma) {
    return Eigen::MatrixXcd((-gamma.domain().length() * g).exp());
  };
  return rule;
}

}  // namespace pathtrans
