#pragma once

#include <functional>

#include "pathtrans/path.hpp"

namespace pathtrans {

enum class Orientation { Preserving, Reversing };

/// A monotone differentiable bijection tau: source -> target. The map and its
/// derivative are supplied analytically; validate() spot-checks monotonicity
/// and the derivative bound on a sample grid.
struct Reparam {
  Interval source;
  Interval target;
  Orientation orientation = Orientation::Preserving;
  std::function<double(double)> map;
  std::function<double(double)> deriv;

  double operator()(double s) const { return map(s); }

  /// Invert tau(s) = t by bisection (tau is monotone). Used when mapping
  /// junction parameters through a composition.
  double invert(double t) const;

  /// Checks endpoint mapping, strict monotonicity and |tau'| >= min_slope on
  /// an n-point grid; throws DomainError on violation.
  void validate(int n = 33, double min_slope = 1e-8) const;
};

/// Affine bijection from source onto target.
Reparam affine_reparam(Interval source, Interval target,
                       Orientation orientation = Orientation::Preserving);

/// Identity on the given interval.
Reparam identity_reparam(Interval interval);

/// The canonical reversal s -> a+b-s on [a,b].
Reparam canonical_reverse(Interval interval);

/// Orientation-preserving cubic from source onto target,
/// tau(s) = lerp(target, u + kappa (u^3 - u)) with u the normalized parameter.
/// Monotone for kappa in (-1/2, 1); the default bends the parameter speed
/// enough to expose covariance bugs without stiffening the integrand.
Reparam cubic_reparam(Interval source, Interval target, double kappa = 0.25);

/// Compose two reparameterizations: (first o second)(s) = first(second(s)).
/// Requires second.target == first.source.
Reparam compose_reparam(const Reparam& first, const Reparam& second);

/// The path gamma o tau. Requires tau.target == gamma.domain.
Path reparameterize(const Path& gamma, const Reparam& tau);

}  // namespace pathtrans
