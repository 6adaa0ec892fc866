#pragma once

#include "pathtrans/laws.hpp"
#include "pathtrans/linear.hpp"

namespace pathtrans {

enum class Group { U1, SU2, GLn };

std::string group_name(Group g);

/// Lie-algebra-valued potential on the chart: components(x)[i] is the value
/// attached to chart direction i at the point x. U1 components are 1x1 purely
/// imaginary, SU2 components anti-Hermitian traceless 2x2; both are checked
/// on evaluation.
struct GaugePotential {
  Group group = Group::GLn;
  int fibre_dim = 0;
  int chart_dim = 0;
  std::function<std::vector<Eigen::MatrixXcd>(const Eigen::VectorXd&)> components;

  std::vector<Eigen::MatrixXcd> at(const Eigen::VectorXd& x) const;

  /// Coefficient field whose transport solves dU/ds = +A_i d(gamma)^i/ds U,
  /// so that a short segment gives id + A_i dx^i at first order.
  ConnectionField connection() const;
};

struct GroupElement {
  Group group = Group::GLn;
  Eigen::MatrixXcd matrix;

  /// |U* U - id| in Frobenius norm (0 for GLn, which has no constraint).
  double unitarity_defect() const;
  /// |det - 1| for SU2, |abs(z) - 1| for U1, 0 for GLn.
  double determinant_defect() const;
  bool valid(double tol = 1e-10) const;
};

/// Nearest group element: polar projection, det-normalized for SU2.
GroupElement project_to_group(Group group, const Eigen::MatrixXcd& m);

/// Phase of a U1 element in (-pi, pi].
double u1_phase(const GroupElement& g);

/// Path-ordered exponential of the potential along gamma (whole domain).
/// With cfg.reunitarize the accumulated element is reprojected every step;
/// otherwise the result is validated and a NumericalError is raised when the
/// group invariants fail beyond 1e-8.
GroupElement group_transport(const GaugePotential& a, const Path& gamma,
                             const IntegratorConfig& cfg = {});

struct WilsonLoopResult {
  GroupElement element;
  Eigen::VectorXd base_point;
};

/// Holonomy of a closed path. Throws DomainError when the endpoints are more
/// than point_tol apart.
WilsonLoopResult wilson_loop(const GaugePotential& a, const Path& loop,
                             const IntegratorConfig& cfg = {},
                             double point_tol = 1e-9);

/// Group-valued transport laws:
///   group-reparam   g(gamma1 o tau) = g(gamma1)
///   group-reverse   g(reversed gamma1) = g(gamma1)^-1
///   group-product   g(gamma1 gamma2) = g(gamma1) g(gamma2)
/// plus the swapped-order product residual as an informational row.
LawReport check_group_laws(const GaugePotential& a, const Path& gamma1,
                           const Path& gamma2, const Reparam& tau, double tol,
                           const IntegratorConfig& cfg = {});

/// First-order expansion over a short straight segment from x to x + dx:
/// reports |g - (id + A_i(x) dx^i)| (pass iff <= tol), the measured
/// second-order coefficient, and the Richardson ratio under dx -> dx/2
/// (pass iff within [3.5, 4.5]).
LawReport infinitesimal_check(const GaugePotential& a, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& dx, double tol,
                              const IntegratorConfig& cfg = {});

}  // namespace pathtrans
