#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pathtrans/errors.hpp"

namespace pathtrans {

/// Closed parameter interval [a, b] with a <= b.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  Interval() = default;
  Interval(double a_, double b_);

  double length() const { return b - a; }
  bool contains(double s, double slack = 1e-12) const {
    return s >= a - slack && s <= b + slack;
  }
  bool contains(const Interval& sub, double slack = 1e-12) const {
    return sub.a >= a - slack && sub.b <= b + slack;
  }
  bool same(const Interval& other, double slack = 1e-12) const {
    return std::abs(a - other.a) <= slack && std::abs(b - other.b) <= slack;
  }
  /// n uniformly spaced parameters, endpoints included (n >= 1).
  std::vector<double> uniform_grid(int n) const;
};

enum class Smoothness { C0, C1 };

/// A parameterized curve s in [a,b] -> R^m. Immutable; cheap to copy.
///
/// Paths built by concatenation or from polylines are continuous but only
/// piecewise differentiable; their interior junction parameters are recorded
/// so integrators can avoid stepping across them. velocity() on such paths
/// returns one-sided values at the junctions themselves.
class Path {
public:
  using PointFn = std::function<Eigen::VectorXd(double)>;

  Path() = default;
  Path(Interval domain, int ambient_dim, Smoothness smooth, PointFn point,
       PointFn velocity, std::vector<double> junctions = {});

  const Interval& domain() const { return domain_; }
  int ambient_dim() const { return dim_; }
  Smoothness smoothness() const { return smooth_; }
  const std::vector<double>& junctions() const { return junctions_; }

  /// Evaluate the curve at s. Throws DomainError outside the domain.
  Eigen::VectorXd point(double s) const;
  /// Evaluate d(gamma)/ds at s (one-sided at endpoints and junctions).
  Eigen::VectorXd velocity(double s) const;

  Eigen::VectorXd start() const { return point(domain_.a); }
  Eigen::VectorXd end() const { return point(domain_.b); }

private:
  friend Path reverse_canonical(const Path& gamma);

  double clamp_into_domain(double s) const;

  Interval domain_{0.0, 1.0};
  int dim_ = 0;
  Smoothness smooth_ = Smoothness::C1;
  PointFn point_;
  PointFn velocity_;
  std::vector<double> junctions_;
  // set on reversed paths so reversing twice returns the original exactly
  std::shared_ptr<const Path> reversed_from_;
};

struct NamedPath {
  std::string name;
  Path path;
};

// -- canonical path operations ----------------------------------------------

/// Restriction of gamma to sub. Requires sub inside gamma's domain.
Path restrict(const Path& gamma, const Interval& sub);

/// The canonically reversed path s -> gamma(a+b-s) on the same domain.
Path reverse_canonical(const Path& gamma);

/// Canonical product of two paths on [0,1]: follows gamma1 at double speed on
/// [0,1/2], then gamma2 on [1/2,1]. Endpoints must match within point_tol.
/// The result is C1 only when the junction velocities agree; otherwise it is
/// continuous with a recorded junction at 1/2.
Path concat_canonical(const Path& gamma1, const Path& gamma2,
                      double point_tol = 1e-9);

/// Point path: constant at x with degenerate domain [a,a].
Path point_path(const Eigen::VectorXd& x, double a);

// -- registry of analytic paths ---------------------------------------------

/// Straight segment from `from` to `to`, affinely parameterized over domain.
Path line_path(const Eigen::VectorXd& from, const Eigen::VectorXd& to,
               Interval domain = {0.0, 1.0});

/// Planar circle of given radius about center; gamma(s) = center + r(cos s, sin s).
Path circle_path(const Eigen::Vector2d& center, double radius,
                 Interval domain = {0.0, 2.0 * EIGEN_PI});

/// Latitude arc on the (theta, phi) chart of the round sphere: theta fixed.
Path latitude_path(double theta0, Interval domain = {0.0, 2.0 * EIGEN_PI});

/// Meridian arc on the (theta, phi) chart: phi fixed, theta = s.
Path longitude_path(double phi0, Interval domain);

/// Piecewise-straight path through the given vertices, one uniform parameter
/// slice per segment; interior vertex parameters become junctions.
Path polyline_path(const std::vector<Eigen::VectorXd>& vertices,
                   Interval domain = {0.0, 1.0});

/// C1 interpolant through samples (s_i, x_i): cubic Hermite with
/// finite-difference tangents, one-sided at the first and last sample.
Path sampled_path(const std::vector<double>& params,
                  const std::vector<Eigen::VectorXd>& points);

}  // namespace pathtrans
