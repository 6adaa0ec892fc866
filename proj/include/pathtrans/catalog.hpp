#pragma once

#include <optional>

#include "pathtrans/gauge.hpp"
#include "pathtrans/linear.hpp"
#include "pathtrans/parallel.hpp"

namespace pathtrans {

/// A connection with closed-form transports on a set of listed paths. The
/// oracle evaluates without integration and anchors every tolerance in the
/// test harness; oracle(path, s, t) returns the transport matrix from s to t
/// along one of the listed paths.
struct CatalogEntry {
  std::string name;
  int fibre_dim = 0;
  ConnectionField connection;
  std::optional<GaugePotential> potential;
  std::vector<NamedPath> paths;
  std::function<Eigen::MatrixXcd(const NamedPath&, double, double)> oracle;
  /// A composable pair of canonical paths for the product-law checks.
  std::optional<std::pair<NamedPath, NamedPath>> canonical_pair;

  const NamedPath& primary_path() const { return paths.front(); }
  const NamedPath& path_named(const std::string& path_name) const;
};

/// Zero coefficients on a 2d chart: every transport is the identity.
CatalogEntry flat();

/// Constant coefficients G0 pulled back from a 1d chart; along the unit-speed
/// line the transport is exp(-(t-s) G0).
CatalogEntry constant_gamma(const Eigen::MatrixXcd& g0);

/// Round-sphere tangent connection in the (theta, phi) chart, evaluated along
/// latitude circles at polar angle theta0 in (0, pi), poles excluded. The
/// coefficient matrix along a latitude is constant and squares to a negative
/// multiple of the identity, so the transport is an elliptic rotation with
/// rate cos(theta0) per unit of longitude.
CatalogEntry sphere_levi_civita(double theta0);

/// U1 potential of a uniform field strength b in the symmetric gauge
/// (-b y / 2, b x / 2) i; around an origin-centered circle of radius r the
/// holonomy phase is b pi r^2.
CatalogEntry u1_uniform(double b);

/// SU2 potential with constant components a_i/2 * i sigma_i on a 3d chart;
/// on straight segments the transport is a single exponential, on polylines
/// the ordered product of segment exponentials.
CatalogEntry su2_constant(const Eigen::Vector3d& a);

/// The five entries above with default parameters.
std::vector<CatalogEntry> standard_catalog();

// -- conjugacy-invariant holonomy helpers -------------------------------------

/// Rotation angle in [0, pi] of a latitude transport, measured in the
/// orthonormal frame (conjugation by diag(1, sin theta0)).
double latitude_rotation_angle(const Eigen::MatrixXcd& h, double theta0);

/// Closed-form rotation angle accumulated over a longitude span, folded into
/// [0, pi]. A full circle gives the classical deficit angle of the latitude
/// cone (2 pi (1 - cos theta0) folded).
double latitude_arc_angle(double theta0, double span);

/// Fold an angle into [0, pi] (distance to the nearest multiple of 2 pi).
double fold_angle(double angle);

// -- negative controls ---------------------------------------------------------

/// Transport that follows the parameter clock, exp(-(t-s) G0), whatever the
/// path: a groupoid that passes restriction but not reparameterization.
TransportFamily mock_parameter_clock(const Eigen::MatrixXcd& g0);

/// Transport whose generator is scaled by the length of the path's domain:
/// passes the groupoid laws on a fixed path and fails restriction.
TransportFamily mock_domain_length(const Eigen::MatrixXcd& g0);

/// Whole-path rule exp(-len(domain) G0): fails reparameterization invariance.
ParallelTransportRule mock_rule_domain_length(const Eigen::MatrixXcd& g0);

}  // namespace pathtrans
