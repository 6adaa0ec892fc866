#include "pathtrans/gauge.hpp"

#include <cmath>
#include <complex>

#include "pathtrans/errors.hpp"
#include "pathtrans/expm.hpp"

namespace pathtrans {

namespace {

void check_algebra_value(Group group, const Eigen::MatrixXcd& a) {
  constexpr double tol = 1e-12;
  switch (group) {
    case Group::U1:
      if (a.rows() != 1 || std::abs(a(0, 0).real()) > tol) {
        throw NumericalError("U1 potential values must be purely imaginary scalars");
      }
      break;
    case Group::SU2: {
      if (a.rows() != 2 ||
          (a + a.adjoint()).norm() > tol ||
          std::abs(a.trace()) > tol) {
        throw NumericalError("SU2 potential values must be anti-Hermitian traceless");
      }
      break;
    }
    case Group::GLn:
      break;
  }
}

}  // namespace

std::string group_name(Group g) {
  switch (g) {
    case Group::U1: return "U1";
    case Group::SU2: return "SU2";
    case Group::GLn: return "GLn";
  }
  return "GLn";
}

std::vector<Eigen::MatrixXcd> GaugePotential::at(const Eigen::VectorXd& x) const {
  if (!components) throw DomainError("gauge potential has no components");
  auto a = components(x);
  if (static_cast<int>(a.size()) != chart_dim) {
    throw NumericalError("gauge potential produced wrong number of components");
  }
  for (const auto& ai : a) check_algebra_value(group, ai);
  return a;
}

ConnectionField GaugePotential::connection() const {
  // Transport coefficients carry the opposite sign of the potential: the
  // integrator solves dU = -Gamma U, and we want dU = +A_i dx^i U.
  GaugePotential self = *this;
  ConnectionField f;
  f.fibre_dim = fibre_dim;
  f.gamma_of = [self](const Path& gamma, double s) {
    if (gamma.ambient_dim() != self.chart_dim) {
      throw DomainError("path ambient dimension does not match the potential");
    }
    const auto a = self.at(gamma.point(s));
    const Eigen::VectorXd v = gamma.velocity(s);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(self.fibre_dim, self.fibre_dim);
    for (int i = 0; i < self.chart_dim; ++i) g -= a[i] * v[i];
    return g;
  };
  return f;
}

double GroupElement::unitarity_defect() const {
  if (group == Group::GLn) return 0.0;
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
  return (matrix.adjoint() * matrix - id).norm();
}

double GroupElement::determinant_defect() const {
  switch (group) {
    case Group::U1: return std::abs(std::abs(matrix(0, 0)) - 1.0);
    case Group::SU2: return std::abs(matrix.determinant() - std::complex<double>(1.0, 0.0));
    case Group::GLn: return 0.0;
  }
  return 0.0;
}

bool GroupElement::valid(double tol) const {
  return unitarity_defect() <= tol && determinant_defect() <= tol;
}

GroupElement project_to_group(Group group, const Eigen::MatrixXcd& m) {
  GroupElement g;
  g.group = group;
  switch (group) {
    case Group::U1: {
      Eigen::MatrixXcd u(1, 1);
      const double mag = std::abs(m(0, 0));
      if (!(mag > 0.0)) throw NumericalError("cannot project the zero element to U1");
      u(0, 0) = m(0, 0) / mag;
      g.matrix = u;
      break;
    }
    case Group::SU2: {
      Eigen::MatrixXcd u = polar_unitary(m);
      // divide out the residual phase so det comes back to 1
      const std::complex<double> det = u.determinant();
      u /= std::sqrt(det);
      g.matrix = u;
      break;
    }
    case Group::GLn:
      g.matrix = m;
      break;
  }
  return g;
}

double u1_phase(const GroupElement& g) {
  if (g.group != Group::U1 || g.matrix.rows() != 1) {
    throw DomainError("phase is defined for U1 elements only");
  }
  return std::arg(g.matrix(0, 0));
}

GroupElement group_transport(const GaugePotential& a, const Path& gamma,
                             const IntegratorConfig& cfg) {
  const ConnectionField field = a.connection();
  const TransportMatrix m = integrate_transport(
      field, gamma, gamma.domain().a, gamma.domain().b, cfg);

  GroupElement g;
  g.group = a.group;
  g.matrix = m.matrix;
  if (cfg.reunitarize) {
    g = project_to_group(a.group, g.matrix);
  } else if (!g.valid(1e-8)) {
    throw NumericalError("group transport drifted off the group manifold");
  }
  return g;
}

WilsonLoopResult wilson_loop(const GaugePotential& a, const Path& loop,
                             const IntegratorConfig& cfg, double point_tol) {
  const double gap = (loop.start() - loop.end()).norm();
  if (gap > point_tol) {
    throw DomainError("wilson loop needs a closed path; endpoint gap = " +
                      std::to_string(gap));
  }
  WilsonLoopResult r;
  r.element = group_transport(a, loop, cfg);
  r.base_point = loop.start();
  return r;
}

LawReport check_group_laws(const GaugePotential& a, const Path& gamma1,
                           const Path& gamma2, const Reparam& tau, double tol,
                           const IntegratorConfig& cfg) {
  LawReport report;
  report.suite = "group-laws";
  report.tol = tol;

  const Eigen::MatrixXcd g1 = group_transport(a, gamma1, cfg).matrix;
  const Eigen::MatrixXcd g2 = group_transport(a, gamma2, cfg).matrix;
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(a.fibre_dim, a.fibre_dim);

  if (!tau.target.same(gamma1.domain())) {
    throw DomainError("reparameterization target must match the first path");
  }
  const Eigen::MatrixXcd g1_tau =
      group_transport(a, reparameterize(gamma1, tau), cfg).matrix;
  report.add(make_check("group-reparam", "gamma1",
                        {tau.source.a, tau.source.b},
                        frobenius_distance(g1_tau, g1), tol));

  const Eigen::MatrixXcd g1_rev =
      group_transport(a, reverse_canonical(gamma1), cfg).matrix;
  report.add(make_check("group-reverse", "gamma1",
                        {gamma1.domain().a, gamma1.domain().b},
                        frobenius_distance(g1_rev * g1, id), tol));

  // The product of group elements composes like the transports themselves:
  // the second factor acts after the first, so its matrix stands on the left.
  const Eigen::MatrixXcd g12 =
      group_transport(a, concat_canonical(gamma1, gamma2), cfg).matrix;
  report.add(make_check("group-product", "gamma1*gamma2", {0.0, 1.0},
                        frobenius_distance(g12, g2 * g1), tol));
  LawCheck swapped = make_check("group-product-swapped", "gamma1*gamma2",
                                {0.0, 1.0}, frobenius_distance(g12, g1 * g2), tol);
  swapped.informational = true;
  report.add(std::move(swapped));

  return report;
}

LawReport infinitesimal_check(const GaugePotential& a, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& dx, double tol,
                              const IntegratorConfig& cfg) {
  LawReport report;
  report.suite = "infinitesimal";
  report.tol = tol;

  const auto comps = a.at(x);
  auto deviation = [&](const Eigen::VectorXd& step) {
    const Path seg = line_path(x, x + step);
    Eigen::MatrixXcd first_order =
        Eigen::MatrixXcd::Identity(a.fibre_dim, a.fibre_dim);
    for (int i = 0; i < a.chart_dim; ++i) first_order += comps[i] * step[i];
    return frobenius_distance(group_transport(a, seg, cfg).matrix, first_order);
  };

  const double len = dx.norm();
  const double e1 = deviation(dx);
  const double e2 = deviation(dx / 2.0);

  report.add(make_check("first-order-expansion", "segment", {len}, e1, tol));

  LawCheck coeff = make_check("expansion-coefficient", "segment", {len},
                              len > 0 ? e1 / (len * len) : 0.0, tol);
  coeff.informational = true;
  report.add(std::move(coeff));

  // halving dx must shrink the deviation about fourfold
  const double ratio = e2 > 0.0 ? e1 / e2 : 4.0;
  LawCheck rich = make_check("expansion-richardson", "segment", {len},
                             std::abs(ratio - 4.0), 0.5);
  rich.pass = ratio >= 3.5 && ratio <= 4.5;
  report.add(std::move(rich));

  return report;
}

}  // namespace pathtrans
