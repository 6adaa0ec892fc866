#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pathtrans/catalog.hpp"
#include "pathtrans/convergence.hpp"
#include "test_support.hpp"

using namespace pathtrans;

TEST_CASE("every oracle agrees with the integrator at default steps") {
  for (const CatalogEntry& e : standard_catalog()) {
    IntegratorConfig cfg;
    cfg.steps = 2000;
    for (const auto& np : e.paths) {
      CAPTURE(e.name);
      CAPTURE(np.name);
      const Interval dom = np.path.domain();
      for (double s : {dom.a, dom.a + 0.35 * dom.length()}) {
        for (double t : {dom.a + 0.75 * dom.length(), dom.b}) {
          const Eigen::MatrixXcd h =
              integrate_transport(e.connection, np.path, s, t, cfg).matrix;
          CHECK(frobenius_distance(h, e.oracle(np, s, t)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("latitude holonomy angles") {
  SUBCASE("the equator is a geodesic") {
    const CatalogEntry e = sphere_levi_civita(EIGEN_PI / 2.0);
    const NamedPath& lat = e.path_named("latitude");
    const Eigen::MatrixXcd h = e.oracle(lat, 0.0, 2.0 * EIGEN_PI);
    CHECK(latitude_rotation_angle(h, EIGEN_PI / 2.0) < 1e-14);
  }
  SUBCASE("once around at sixty degrees rotates by half a turn") {
    const double theta0 = EIGEN_PI / 3.0;
    const CatalogEntry e = sphere_levi_civita(theta0);
    IntegratorConfig cfg;
    cfg.steps = 2000;
    const NamedPath& lat = e.path_named("latitude");
    const Eigen::MatrixXcd h =
        integrate_transport(e.connection, lat.path, 0.0, 2.0 * EIGEN_PI, cfg)
            .matrix;
    CHECK(latitude_rotation_angle(h, theta0) ==
          doctest::Approx(EIGEN_PI).epsilon(1e-9));
    CHECK(latitude_arc_angle(theta0, 2.0 * EIGEN_PI) ==
          doctest::Approx(EIGEN_PI));
  }
  SUBCASE("a quarter arc accumulates a quarter of the angle") {
    const double theta0 = EIGEN_PI / 3.0;
    const CatalogEntry e = sphere_levi_civita(theta0);
    IntegratorConfig cfg;
    cfg.steps = 2000;
    const NamedPath& quarter = e.path_named("quarter-latitude");
    const Eigen::MatrixXcd h =
        integrate_transport(e.connection, quarter.path, 0.0, EIGEN_PI / 2.0, cfg)
            .matrix;
    CHECK(latitude_rotation_angle(h, theta0) ==
          doctest::Approx(EIGEN_PI / 4.0).epsilon(1e-9));
  }
  SUBCASE("poles are rejected") {
    CHECK_THROWS_AS(sphere_levi_civita(0.0), DomainError);
    CHECK_THROWS_AS(sphere_levi_civita(EIGEN_PI), DomainError);
  }
}

TEST_CASE("constant coefficient special cases") {
  SUBCASE("zero matrix reduces to the flat transport") {
    const CatalogEntry e = constant_gamma(Eigen::MatrixXcd::Zero(2, 2));
    const NamedPath& line = e.primary_path();
    CHECK(frobenius_distance(e.oracle(line, 0.0, 1.0),
                             Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
  }
  SUBCASE("nilpotent coefficients truncate the series") {
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(2, 2);
    n(0, 1) = 1.0;
    const CatalogEntry e = constant_gamma(n);
    const NamedPath& line = e.primary_path();
    const Eigen::MatrixXcd h = e.oracle(line, 0.25, 0.75);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(2, 2) - 0.5 * n;
    CHECK(frobenius_distance(h, expected) < 1e-15);
  }
  SUBCASE("diagonal coefficients exponentiate entrywise") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 0.9;
    d(1, 1) = -0.4;
    const CatalogEntry e = constant_gamma(d);
    const NamedPath& line = e.primary_path();
    const Eigen::MatrixXcd h = e.oracle(line, 0.0, 1.0);
    CHECK(std::abs(h(0, 0) - std::exp(std::complex<double>(-0.9))) < 1e-15);
    CHECK(std::abs(h(1, 1) - std::exp(std::complex<double>(0.4))) < 1e-15);
  }
}

TEST_CASE("u1 flux reversal") {
  const CatalogEntry e = u1_uniform(0.0);
  const NamedPath& circle = e.path_named("circle");
  CHECK(std::abs(e.oracle(circle, 0.0, 2.0 * EIGEN_PI)(0, 0) - 1.0) == 0.0);

  const CatalogEntry epos = u1_uniform(1.7);
  IntegratorConfig cfg;
  cfg.steps = 1000;
  const Path& loop = epos.path_named("circle").path;
  const Eigen::MatrixXcd fwd =
      integrate_transport(epos.connection, loop, 0.0, 2.0 * EIGEN_PI, cfg).matrix;
  const Eigen::MatrixXcd bwd =
      integrate_transport(epos.connection, reverse_canonical(loop), 0.0,
                          2.0 * EIGEN_PI, cfg)
          .matrix;
  CHECK(std::abs(fwd(0, 0) * bwd(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("su2 zero coefficients give the identity") {
  const CatalogEntry e = su2_constant(Eigen::Vector3d::Zero());
  const NamedPath& seg = e.path_named("segment-x");
  CHECK(frobenius_distance(e.oracle(seg, 0.0, 1.0),
                           Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
}

TEST_CASE("angle folding") {
  CHECK(fold_angle(0.0) == 0.0);
  CHECK(fold_angle(EIGEN_PI) == doctest::Approx(EIGEN_PI));
  CHECK(fold_angle(1.5 * EIGEN_PI) == doctest::Approx(0.5 * EIGEN_PI));
  CHECK(fold_angle(-0.25) == doctest::Approx(0.25));
  CHECK(fold_angle(2.0 * EIGEN_PI + 0.3) == doctest::Approx(0.3));
}

TEST_CASE("integrator convergence order on the catalog") {
  for (const CatalogEntry& e : standard_catalog()) {
    CAPTURE(e.name);
    const ConvergenceResult r = measure_convergence(e, {250, 500, 1000, 2000});
    CHECK(r.pass);
    if (e.name == "flat") {
      CHECK(r.exact);
    } else {
      CHECK_FALSE(r.exact);
      CHECK(r.slope == doctest::Approx(2.0).epsilon(0.15));
      // residuals actually decay between the extreme step counts
      CHECK(r.rows.front().residual > 10.0 * r.rows.back().residual);
    }
  }
}

TEST_CASE("order fit guards") {
  CHECK_THROWS_AS(fit_loglog_order({{100, 1.0}}), DomainError);
  const double order =
      fit_loglog_order({{100, 1.0}, {200, 0.25}, {400, 0.0625}});
  CHECK(order == doctest::Approx(2.0));
}
