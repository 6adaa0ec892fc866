#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pathtrans/catalog.hpp"
#include "pathtrans/expm.hpp"
#include "pathtrans/linear.hpp"
#include "test_support.hpp"

using namespace pathtrans;
using testsupport::constant_transport_oracle;
using testsupport::expm_oracle;
using testsupport::loglog_slope;
using testsupport::random_matrix;

namespace {

Path unit_line() {
  return line_path(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1));
}

/// Circle of radius r in the z = 0 plane of a 3d chart; along it the su2
/// coefficients genuinely vary and do not commute between parameters.
Path circle3d(double r) {
  return Path(
      {0.0, 2.0 * EIGEN_PI}, 3, Smoothness::C1,
      [r](double s) {
        return Eigen::VectorXd(
            Eigen::Vector3d(r * std::cos(s), r * std::sin(s), 0.0));
      },
      [r](double s) {
        return Eigen::VectorXd(
            Eigen::Vector3d(-r * std::sin(s), r * std::cos(s), 0.0));
      });
}

}  // namespace

TEST_CASE("matrix exponential kernel") {
  SUBCASE("2x2 closed form matches the Pade route") {
    for (unsigned seed = 0; seed < 40; ++seed) {
      const Eigen::MatrixXcd m = random_matrix(2, seed, false);
      CHECK(frobenius_distance(matrix_exp(m), expm_oracle(m)) < 1e-13);
    }
  }
  SUBCASE("nilpotent argument is exact") {
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(2, 2);
    n(0, 1) = 1.0;
    const Eigen::MatrixXcd e = matrix_exp(n);
    CHECK(e(0, 0) == std::complex<double>(1, 0));
    CHECK(e(0, 1) == std::complex<double>(1, 0));
    CHECK(e(1, 0) == std::complex<double>(0, 0));
    CHECK(e(1, 1) == std::complex<double>(1, 0));
  }
  SUBCASE("1x1 and 3x3 sizes") {
    Eigen::MatrixXcd z(1, 1);
    z(0, 0) = std::complex<double>(0.3, 1.2);
    CHECK(std::abs(matrix_exp(z)(0, 0) - std::exp(z(0, 0))) < 1e-15);
    const Eigen::MatrixXcd m = random_matrix(3, 7, false);
    CHECK(frobenius_distance(matrix_exp(m), expm_oracle(m)) < 1e-12);
  }
}

TEST_CASE("integrate_transport basics") {
  const Path line = unit_line();

  SUBCASE("zero coefficients give the identity") {
    const ConnectionField zero = constant_field(Eigen::MatrixXcd::Zero(2, 2));
    const TransportMatrix h = integrate_transport(zero, line, 0.0, 1.0);
    CHECK(frobenius_distance(h.matrix, Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
  }
  SUBCASE("equal endpoints give the identity exactly") {
    const ConnectionField f = constant_field(random_matrix(2, 5, false));
    const TransportMatrix h = integrate_transport(f, line, 0.37, 0.37);
    CHECK(frobenius_distance(h.matrix, Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
  }
  SUBCASE("constant coefficients match the exponential oracle") {
    const Eigen::MatrixXcd g = random_matrix(2, 9, false);
    const ConnectionField f = constant_field(g);
    IntegratorConfig cfg;
    cfg.steps = 2000;
    const TransportMatrix h = integrate_transport(f, line, 0.1, 0.9, cfg);
    CHECK(frobenius_distance(h.matrix, constant_transport_oracle(g, 0.1, 0.9)) <
          1e-10);
  }
  SUBCASE("nilpotent coefficients reproduce the truncated series") {
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(2, 2);
    n(0, 1) = 1.0;
    const TransportMatrix h = integrate_transport(constant_field(n), line, 0.2, 0.9);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(2, 2) - (0.9 - 0.2) * n;
    CHECK(frobenius_distance(h.matrix, expected) < 2e-13);
  }
  SUBCASE("diagonal coefficients give entrywise exponentials") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 0.7;
    d(1, 1) = -0.4;
    const TransportMatrix h = integrate_transport(constant_field(d), line, 0.0, 1.0);
    CHECK(std::abs(h.matrix(0, 0) - std::exp(std::complex<double>(-0.7))) < 1e-12);
    CHECK(std::abs(h.matrix(1, 1) - std::exp(std::complex<double>(0.4))) < 1e-12);
    CHECK(std::abs(h.matrix(0, 1)) == 0.0);
  }
  SUBCASE("parameters outside the domain are rejected") {
    const ConnectionField f = constant_field(Eigen::MatrixXcd::Zero(2, 2));
    CHECK_THROWS_AS(integrate_transport(f, line, 0.0, 1.5), DomainError);
  }
}

TEST_CASE("reverse orientation: inverted forward run agrees with direct run") {
  const CatalogEntry e = su2_constant(Eigen::Vector3d(1.2, 0.9, 0.5));
  const Path circ = circle3d(1.0);
  IntegratorConfig cfg;
  cfg.steps = 3000;
  const TransportMatrix back =
      integrate_transport(e.connection, circ, 5.0, 1.0, cfg);
  const TransportMatrix direct =
      integrate_transport_oriented(e.connection, circ, 5.0, 1.0, cfg);
  CHECK(back.source_param == 5.0);
  CHECK(back.target_param == 1.0);
  CHECK(frobenius_distance(back.matrix, direct.matrix) < 1e-9);
}

TEST_CASE("junction splitting on piecewise paths") {
  const CatalogEntry e = su2_constant(Eigen::Vector3d(0.8, -0.6, 0.3));
  const NamedPath& square = e.path_named("square-loop");
  IntegratorConfig cfg;
  cfg.steps = 2000;
  const TransportMatrix h =
      integrate_transport(e.connection, square.path, 0.0, 1.0, cfg);
  // per straight piece the generator is constant, so the ordered product of
  // segment exponentials is exact
  CHECK(frobenius_distance(h.matrix, e.oracle(square, 0.0, 1.0)) < 1e-10);

  SUBCASE("partial spans crossing junctions") {
    const TransportMatrix part =
        integrate_transport(e.connection, square.path, 0.1, 0.6, cfg);
    CHECK(frobenius_distance(part.matrix, e.oracle(square, 0.1, 0.6)) < 1e-10);
  }
}

TEST_CASE("frame transports") {
  const Path line = unit_line();

  SUBCASE("constant frame gives the identity") {
    FrameFunction f{2, [](double) { return random_matrix(2, 77); }};
    // capture one fixed matrix
    const Eigen::MatrixXcd m = random_matrix(2, 77);
    f.f_of = [m](double) { return m; };
    const TransportMatrix h = transport_from_frame(f, line, 0.2, 0.8);
    CHECK(frobenius_distance(h.matrix, Eigen::MatrixXcd::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("exponential frame") {
    FrameFunction f{2, [](double s) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
      m(0, 0) = std::exp(s);
      return m;
    }};
    const TransportMatrix h = transport_from_frame(f, line, 0.3, 0.9);
    CHECK(std::abs(h.matrix(0, 0) - std::exp(std::complex<double>(0.3 - 0.9))) <
          1e-15);
    CHECK(std::abs(h.matrix(1, 1) - 1.0) == 0.0);
  }
  SUBCASE("groupoid laws hold at arithmetic precision") {
    const Eigen::MatrixXcd a = random_matrix(2, 31, false);
    FrameFunction f{2, [a](double s) {
      return Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(2, 2) + s * a +
                              0.5 * s * s * a * a);
    }};
    const TransportFamily fam = frame_transport(f);
    const LawReport r =
        check_groupoid(fam, line, line.domain().uniform_grid(9), 1e-13);
    CHECK(r.passed());
  }
  SUBCASE("singular frame is rejected") {
    FrameFunction f{2, [](double s) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
      m(0, 0) = s;  // singular at s = 0
      return m;
    }};
    CHECK_THROWS_AS(transport_from_frame(f, line, 0.5, 0.0), NumericalError);
  }
}

TEST_CASE("coefficients recovered from a frame") {
  const Path line = unit_line();

  SUBCASE("constant frame has zero coefficients") {
    const Eigen::MatrixXcd m = random_matrix(2, 13);
    FrameFunction f{2, [m](double) { return m; }};
    CHECK(coefficients_from_frame(f, line, 0.5).norm() < 1e-11);
  }
  SUBCASE("diagonal exponential frame") {
    FrameFunction f{2, [](double s) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
      m(0, 0) = std::exp(s);
      return m;
    }};
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(frobenius_distance(coefficients_from_frame(f, line, 0.5, 1e-4),
                             expected) < 1e-6);
    // one-sided stencils at the endpoints
    CHECK(frobenius_distance(coefficients_from_frame(f, line, 0.0, 1e-4),
                             expected) < 1e-6);
    CHECK(frobenius_distance(coefficients_from_frame(f, line, 1.0, 1e-4),
                             expected) < 1e-6);
  }
  SUBCASE("integrating the extracted coefficients matches the frame") {
    const Eigen::MatrixXcd a = 0.6 * random_matrix(2, 41, false);
    FrameFunction f{2, [a](double s) {
      return Eigen::MatrixXcd(expm_oracle((s * a).eval()));
    }};
    const ConnectionField extracted =
        direct_field(2, [f, line = unit_line()](double s) {
          return coefficients_from_frame(f, line, s, 1e-4);
        });
    IntegratorConfig cfg;
    cfg.steps = 2000;
    const TransportMatrix via_ode =
        integrate_transport(extracted, line, 0.1, 0.9, cfg);
    const TransportMatrix via_frame = transport_from_frame(f, line, 0.1, 0.9);
    CHECK(frobenius_distance(via_ode.matrix, via_frame.matrix) < 1e-7);
  }
  SUBCASE("cancellation guard") {
    FrameFunction f{2, [](double) { return Eigen::MatrixXcd::Identity(2, 2); }};
    CHECK_THROWS_AS(coefficients_from_frame(f, line, 0.5, 1e-8), NumericalError);
  }
  SUBCASE("extracted coefficients transform covariantly") {
    const Eigen::MatrixXcd a = 0.6 * random_matrix(2, 83, false);
    FrameFunction f{2, [a](double s) {
      return Eigen::MatrixXcd(expm_oracle((s * a).eval()));
    }};
    const Reparam tau = cubic_reparam({0.0, 1.0}, {0.0, 1.0}, 0.3);
    FrameFunction f_tau{2, [f, tau](double s) { return f(tau.map(s)); }};
    const Path bent = reparameterize(line, tau);
    for (double s : {0.25, 0.5, 0.75}) {
      const Eigen::MatrixXcd lhs = coefficients_from_frame(f_tau, bent, s, 1e-4);
      const Eigen::MatrixXcd rhs =
          tau.deriv(s) * coefficients_from_frame(f, line, tau.map(s), 1e-4);
      CHECK(frobenius_distance(lhs, rhs) < 1e-6);
    }
  }
}

TEST_CASE("coefficient fields under reparameterization") {
  const Path line = unit_line();
  const Eigen::MatrixXcd g = random_matrix(2, 55, false);
  const ConnectionField field = constant_field(g);

  SUBCASE("identity leaves the field alone") {
    const ConnectionField same =
        reparam_coefficients(field, line, identity_reparam(line.domain()));
    CHECK(frobenius_distance(same(line, 0.3), field(line, 0.3)) == 0.0);
  }
  SUBCASE("affine double speed doubles the field") {
    const Reparam tau = affine_reparam({0.0, 0.5}, {0.0, 1.0});
    const ConnectionField scaled = reparam_coefficients(field, line, tau);
    CHECK(frobenius_distance(scaled(line, 0.2), 2.0 * g) < 1e-15);
  }
  SUBCASE("transformed coefficients integrate to the mapped transport") {
    const Reparam tau = cubic_reparam({0.0, 1.0}, {0.0, 1.0}, 0.3);
    const ConnectionField bent_field = reparam_coefficients(field, line, tau);
    const Path bent = reparameterize(line, tau);
    IntegratorConfig cfg;
    cfg.steps = 8000;
    const TransportMatrix lhs =
        integrate_transport(bent_field, bent, 0.15, 0.85, cfg);
    const Eigen::MatrixXcd rhs =
        constant_transport_oracle(g, tau.map(0.15), tau.map(0.85));
    CHECK(frobenius_distance(lhs.matrix, rhs) < 1e-8);
  }
}

TEST_CASE("derivation along a path") {
  const Path line = unit_line();
  const Eigen::MatrixXcd g = random_matrix(2, 71, false);
  const ConnectionField field = constant_field(g);

  SUBCASE("flat coefficients reduce to the plain derivative") {
    const ConnectionField zero = constant_field(Eigen::MatrixXcd::Zero(2, 2));
    auto sigma = [](double s) {
      Eigen::VectorXcd v(2);
      v << std::sin(s), std::cos(2.0 * s);
      return v;
    };
    const Eigen::VectorXcd d = derivation(zero, line, sigma, 0.5, 1e-4);
    Eigen::VectorXcd expected(2);
    expected << std::cos(0.5), -2.0 * std::sin(1.0);
    CHECK((d - expected).norm() < 1e-7);
  }
  SUBCASE("transported sections have zero derivation") {
    IntegratorConfig cfg;
    cfg.steps = 500;
    Eigen::VectorXcd v0(2);
    v0 << 1.0, -0.5;
    auto sigma = [&](double u) {
      return Eigen::VectorXcd(
          integrate_transport(field, line, 0.5, u, cfg).matrix * v0);
    };
    CHECK(derivation(field, line, sigma, 0.5, 1e-4).norm() < 1e-6);
  }
  SUBCASE("derivation agrees with the transport difference quotient") {
    auto sigma = [](double s) {
      Eigen::VectorXcd v(2);
      v << std::sin(s), std::exp(0.3 * s);
      return v;
    };
    const double s = 0.45, h = 1e-4;
    const Eigen::VectorXcd closed = derivation(field, line, sigma, s, h);
    // independent finite-difference route through the transport itself
    IntegratorConfig cfg;
    cfg.steps = 64;
    auto pull = [&](double u) {
      return Eigen::VectorXcd(
          integrate_transport(field, line, u, s, cfg).matrix * sigma(u));
    };
    const Eigen::VectorXcd quotient = (pull(s + h) - pull(s - h)) / (2.0 * h);
    CHECK((closed - quotient).norm() < 1e-6);
  }
  SUBCASE("covariance under reparameterization") {
    const Reparam tau = cubic_reparam({0.0, 1.0}, {0.0, 1.0}, 0.3);
    const Path bent = reparameterize(line, tau);
    const ConnectionField bent_field = reparam_coefficients(field, line, tau);
    auto sigma = [](double s) {
      Eigen::VectorXcd v(2);
      v << std::sin(s), std::cos(2.0 * s);
      return v;
    };
    auto sigma_tau = [&](double s) { return sigma(tau.map(s)); };
    const double s = 0.4, h = 1e-4;
    const Eigen::VectorXcd lhs = derivation(bent_field, bent, sigma_tau, s, h);
    const Eigen::VectorXcd rhs =
        tau.deriv(s) *
        derivation(field, line, sigma, tau.map(s), h);
    CHECK((lhs - rhs).norm() < 1e-5);
  }
  SUBCASE("cancellation guard") {
    auto sigma = [](double) { return Eigen::VectorXcd::Zero(2).eval(); };
    CHECK_THROWS_AS(derivation(field, line, sigma, 0.5, 1e-9), NumericalError);
  }
  SUBCASE("stencil must stay inside the domain") {
    auto sigma = [](double) { return Eigen::VectorXcd::Zero(2).eval(); };
    CHECK_THROWS_AS(derivation(field, line, sigma, 0.0, 1e-4), DomainError);
  }
}

TEST_CASE("flow property converges at second order on a noncommuting field") {
  const CatalogEntry e = su2_constant(Eigen::Vector3d(1.2, 0.9, 0.5));
  const Path circ = circle3d(1.0);
  const double s = 0.0, t = 0.9, r = 2.2;

  std::vector<std::pair<double, double>> rows;
  for (int n : {250, 500, 1000, 2000}) {
    IntegratorConfig cfg;
    cfg.steps = n;
    const Eigen::MatrixXcd a =
        integrate_transport(e.connection, circ, s, t, cfg).matrix;
    const Eigen::MatrixXcd b =
        integrate_transport(e.connection, circ, t, r, cfg).matrix;
    const Eigen::MatrixXcd c =
        integrate_transport(e.connection, circ, s, r, cfg).matrix;
    rows.push_back({static_cast<double>(n), frobenius_distance(b * a, c)});
  }
  const double order = -loglog_slope(rows);
  CHECK(order > 1.7);
  CHECK(order < 2.3);
}

TEST_CASE("left-endpoint scheme is first order") {
  Eigen::MatrixXcd g(2, 2);
  g << 0.3, 1.0, 0.0, -0.2;
  const CatalogEntry e = constant_gamma(g);
  const Path line = e.primary_path().path;
  const Reparam tau = cubic_reparam(line.domain(), line.domain());
  const Path bent = reparameterize(line, tau);

  std::vector<std::pair<double, double>> rows;
  for (int n : {250, 500, 1000, 2000}) {
    IntegratorConfig cfg;
    cfg.steps = n;
    cfg.scheme = Scheme::ProductOfExponentials;
    const Eigen::MatrixXcd h =
        integrate_transport(e.connection, bent, 0.0, 1.0, cfg).matrix;
    rows.push_back({static_cast<double>(n),
                    frobenius_distance(h, constant_transport_oracle(g, 0.0, 1.0))});
  }
  const double order = -loglog_slope(rows);
  CHECK(order > 0.8);
  CHECK(order < 1.2);
}

TEST_CASE("unitary preservation with per-step reprojection") {
  const CatalogEntry e = su2_constant(Eigen::Vector3d(1.2, 0.9, 0.5));
  const Path circ = circle3d(1.0);
  IntegratorConfig cfg;
  cfg.steps = 2000;
  cfg.reunitarize = true;

  double worst = 0.0;
  StepObserver observer = [&](double, const Eigen::MatrixXcd& u) {
    worst = std::max(
        worst, frobenius_distance(u.adjoint() * u,
                                  Eigen::MatrixXcd::Identity(2, 2)));
  };
  integrate_transport(e.connection, circ, 0.0, 2.0 * EIGEN_PI, cfg, observer);
  CHECK(worst <= 1e-12);
}
