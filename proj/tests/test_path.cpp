#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pathtrans/path.hpp"
#include "pathtrans/reparam.hpp"

using namespace pathtrans;

namespace {

double max_point_distance(const Path& a, const Path& b, int samples = 41) {
  REQUIRE(a.domain().same(b.domain()));
  double worst = 0.0;
  for (double s : a.domain().uniform_grid(samples)) {
    worst = std::max(worst, (a.point(s) - b.point(s)).norm());
  }
  return worst;
}

Path unit_circle() { return circle_path(Eigen::Vector2d(0, 0), 1.0); }

}  // namespace

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(Interval(1.0, 0.0), DomainError);
  CHECK(Interval(0.0, 0.0).length() == 0.0);
  const auto g = Interval(0.0, 2.0).uniform_grid(5);
  CHECK(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 2.0);
  CHECK(g[2] == doctest::Approx(1.0));
}

TEST_CASE("registry evaluation") {
  const Path circle = unit_circle();
  CHECK((circle.point(EIGEN_PI) - Eigen::Vector2d(-1.0, 0.0)).norm() < 1e-15);
  CHECK((circle.velocity(0.0) - Eigen::Vector2d(0.0, 1.0)).norm() < 1e-15);

  const Path seg = line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(2, 0),
                             Interval(1.0, 3.0));
  CHECK((seg.point(2.0) - Eigen::Vector2d(1, 0)).norm() < 1e-15);
  CHECK_THROWS_AS(seg.point(0.5), DomainError);
  CHECK_THROWS_AS(seg.point(3.5), DomainError);
}

TEST_CASE("restriction") {
  const Path circle = unit_circle();

  SUBCASE("full domain is the identity operation") {
    const Path same = restrict(circle, circle.domain());
    CHECK(max_point_distance(same, circle) == 0.0);
  }
  SUBCASE("nested restrictions collapse") {
    const Path outer = restrict(circle, {0.2, 0.8});
    const Path inner = restrict(outer, {0.3, 0.5});
    const Path direct = restrict(circle, {0.3, 0.5});
    CHECK(max_point_distance(inner, direct) == 0.0);
  }
  SUBCASE("half circle hits the antipode") {
    const Path half = restrict(circle, {0.0, EIGEN_PI});
    CHECK((half.point(EIGEN_PI) - Eigen::Vector2d(-1, 0)).norm() < 1e-15);
  }
  SUBCASE("escaping interval is rejected") {
    CHECK_THROWS_AS(restrict(circle, {-1.0, 1.0}), DomainError);
  }
}

TEST_CASE("canonical reversal") {
  const Path line01 = line_path(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1));
  const Path rev = reverse_canonical(line01);
  CHECK(rev.point(0.25)[0] == doctest::Approx(0.75).epsilon(1e-15));

  SUBCASE("involution is exact") {
    CHECK(max_point_distance(reverse_canonical(rev), line01) == 0.0);
  }
  SUBCASE("endpoint swap on a shifted domain") {
    const Path arc = latitude_path(1.0, {1.0, 3.0});
    const Path arc_rev = reverse_canonical(arc);
    CHECK((arc_rev.point(1.0) - arc.point(3.0)).norm() == 0.0);
    CHECK((arc_rev.point(3.0) - arc.point(1.0)).norm() == 0.0);
  }
  SUBCASE("velocity flips sign") {
    CHECK(rev.velocity(0.4)[0] == doctest::Approx(-1.0));
  }
}

TEST_CASE("canonical product") {
  const Path leg_x = line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0));
  const Path leg_y = line_path(Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1));
  const Path bent = concat_canonical(leg_x, leg_y);

  CHECK((bent.point(0.5) - Eigen::Vector2d(1, 0)).norm() < 1e-15);
  CHECK((bent.point(0.25) - leg_x.point(0.5)).norm() < 1e-15);
  CHECK(bent.smoothness() == Smoothness::C0);
  REQUIRE(bent.junctions().size() == 1);
  CHECK(bent.junctions()[0] == 0.5);

  SUBCASE("constant second factor") {
    const Path rest =
        line_path(Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 0));
    const Path stop = concat_canonical(leg_x, rest);
    CHECK((stop.point(0.75) - leg_x.point(1.0)).norm() < 1e-15);
  }
  SUBCASE("junction mismatch is rejected") {
    CHECK_THROWS_AS(concat_canonical(leg_y, leg_x), DomainError);
  }
  SUBCASE("domains must be canonical") {
    const Path shifted = line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0),
                                   Interval(0.0, 2.0));
    CHECK_THROWS_AS(concat_canonical(shifted, leg_y), DomainError);
  }
  SUBCASE("straight-through product stays C1") {
    const Path first = line_path(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0));
    const Path second = line_path(Eigen::Vector2d(1, 0), Eigen::Vector2d(2, 0));
    CHECK(concat_canonical(first, second).smoothness() == Smoothness::C1);
  }
}

TEST_CASE("reparameterization") {
  const Path circle = unit_circle();

  SUBCASE("identity leaves the path alone") {
    const Path same = reparameterize(circle, identity_reparam(circle.domain()));
    CHECK(max_point_distance(same, circle) == 0.0);
  }
  SUBCASE("double speed") {
    const Path fast = reparameterize(
        circle, affine_reparam({0.0, EIGEN_PI}, circle.domain()));
    CHECK((fast.point(EIGEN_PI / 2.0) - circle.point(EIGEN_PI)).norm() < 1e-15);
    CHECK((fast.velocity(0.3) - 2.0 * circle.velocity(0.6)).norm() < 1e-14);
  }
  SUBCASE("canonical reversal agrees with reverse_canonical") {
    const Path via_tau =
        reparameterize(circle, canonical_reverse(circle.domain()));
    const Path direct = reverse_canonical(circle);
    CHECK(max_point_distance(via_tau, direct) == 0.0);
  }
  SUBCASE("target mismatch is rejected") {
    CHECK_THROWS_AS(
        reparameterize(circle, identity_reparam({0.0, 1.0})), DomainError);
  }
}

TEST_CASE("reparameterization functoriality on a sample grid") {
  const Path circle = unit_circle();
  const Reparam tau1 = cubic_reparam({0.0, 1.0}, circle.domain(), 0.3);
  const Reparam tau2 = affine_reparam({2.0, 5.0}, {0.0, 1.0});
  const Path stepwise = reparameterize(reparameterize(circle, tau1), tau2);
  const Path fused = reparameterize(circle, compose_reparam(tau1, tau2));
  CHECK(max_point_distance(stepwise, fused) < 1e-15);
}

TEST_CASE("point paths") {
  const Eigen::Vector2d x(0.3, -0.7);
  const Path p = point_path(x, 2.0);
  CHECK((p.point(2.0) - x).norm() == 0.0);
  CHECK(p.domain().length() == 0.0);
  CHECK(max_point_distance(restrict(p, {2.0, 2.0}), p) == 0.0);
  CHECK_THROWS_AS(p.point(2.5), DomainError);
}

TEST_CASE("polyline junctions and velocity") {
  const Path zig = polyline_path({Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0),
                                  Eigen::Vector2d(1, 1), Eigen::Vector2d(2, 1)});
  REQUIRE(zig.junctions().size() == 2);
  CHECK(zig.junctions()[0] == doctest::Approx(1.0 / 3.0));
  CHECK((zig.point(0.5) - Eigen::Vector2d(1, 0.5)).norm() < 1e-15);
  CHECK((zig.velocity(0.5) - Eigen::Vector2d(0, 3)).norm() < 1e-15);
}

TEST_CASE("sampled path interpolates an analytic curve") {
  // finite-difference tangents make the interpolant third-order accurate
  std::vector<double> params;
  std::vector<Eigen::VectorXd> pts;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double s = 2.0 * EIGEN_PI * i / n;
    params.push_back(s);
    pts.push_back(Eigen::Vector2d(std::cos(s), std::sin(s)));
  }
  const Path interp = sampled_path(params, pts);
  const Path exact = unit_circle();
  CHECK(max_point_distance(interp, exact, 101) < 3e-5);

  double worst_v = 0.0;
  for (double s : Interval(0.3, 6.0).uniform_grid(25)) {
    worst_v = std::max(worst_v, (interp.velocity(s) - exact.velocity(s)).norm());
  }
  CHECK(worst_v < 2e-3);

  CHECK_THROWS_AS(sampled_path({0.0, 0.0}, {pts[0], pts[1]}), DomainError);
}

TEST_CASE("reparameterization validation") {
  const Reparam good = cubic_reparam({0.0, 1.0}, {0.0, 2.0}, 0.4);
  CHECK_NOTHROW(good.validate());

  Reparam broken = good;
  broken.map = [](double s) { return 2.0 * s * s; };  // derivative hits 0
  broken.deriv = [](double s) { return 4.0 * s; };
  CHECK_THROWS_AS(broken.validate(), DomainError);

  const Reparam rev = canonical_reverse({0.0, 1.0});
  CHECK_NOTHROW(rev.validate());
  CHECK(rev.map(0.25) == doctest::Approx(0.75));

  CHECK_THROWS_AS(cubic_reparam({0.0, 1.0}, {0.0, 1.0}, 0.99 + 0.02),
                  DomainError);
}

TEST_CASE("monotone inversion used for junction mapping") {
  const Reparam tau = cubic_reparam({0.0, 1.0}, {0.0, 1.0}, 0.3);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double s = dist(rng);
    CHECK(tau.invert(tau.map(s)) == doctest::Approx(s).epsilon(1e-10));
  }

  // junctions travel through compositions
  const Path zig = polyline_path(
      {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1)});
  const Path bent = reparameterize(zig, tau);
  REQUIRE(bent.junctions().size() == 1);
  CHECK(tau.map(bent.junctions()[0]) == doctest::Approx(0.5).epsilon(1e-12));
}
