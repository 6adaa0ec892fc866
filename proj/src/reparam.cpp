#include "pathtrans/reparam.hpp"

#include <algorithm>
#include <cmath>

namespace pathtrans {

double Reparam::invert(double t) const {
  if (!target.contains(t)) {
    throw DomainError("value outside reparameterization target");
  }
  double lo = source.a, hi = source.b;
  const bool increasing = orientation == Orientation::Preserving;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double v = map(mid);
    if ((v < t) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

void Reparam::validate(int n, double min_slope) const {
  if (!map || !deriv) throw DomainError("reparameterization lacks map or derivative");
  const auto grid = source.uniform_grid(n);
  const bool inc = orientation == Orientation::Preserving;
  const double lo = inc ? target.a : target.b;
  const double hi = inc ? target.b : target.a;
  if (std::abs(map(source.a) - lo) > 1e-9 || std::abs(map(source.b) - hi) > 1e-9) {
    throw DomainError("reparameterization endpoints do not map onto the target");
  }
  double prev = map(grid.front());
  for (size_t i = 1; i < grid.size(); ++i) {
    const double cur = map(grid[i]);
    if (inc ? (cur <= prev) : (cur >= prev)) {
      throw DomainError("reparameterization is not strictly monotone");
    }
    prev = cur;
  }
  for (double s : grid) {
    const double d = deriv(s);
    if (!std::isfinite(d) || std::abs(d) < min_slope) {
      throw DomainError("reparameterization derivative too close to zero");
    }
    if ((d > 0) != inc) {
      throw DomainError("reparameterization derivative sign contradicts orientation");
    }
  }
}

Reparam affine_reparam(Interval source, Interval target, Orientation orientation) {
  if (source.length() <= 0.0) {
    throw DomainError("affine reparameterization needs a nondegenerate source");
  }
  const double slope = (orientation == Orientation::Preserving
                            ? target.length()
                            : -target.length()) /
                       source.length();
  const double anchor =
      orientation == Orientation::Preserving ? target.a : target.b;
  const double a = source.a;
  Reparam tau;
  tau.source = source;
  tau.target = target;
  tau.orientation = orientation;
  tau.map = [anchor, slope, a](double s) { return anchor + slope * (s - a); };
  tau.deriv = [slope](double) { return slope; };
  return tau;
}

Reparam identity_reparam(Interval interval) {
  Reparam tau;
  tau.source = interval;
  tau.target = interval;
  tau.orientation = Orientation::Preserving;
  tau.map = [](double s) { return s; };
  tau.deriv = [](double) { return 1.0; };
  return tau;
}

Reparam canonical_reverse(Interval interval) {
  const double sum = interval.a + interval.b;
  Reparam tau;
  tau.source = interval;
  tau.target = interval;
  tau.orientation = Orientation::Reversing;
  tau.map = [sum](double s) { return sum - s; };
  tau.deriv = [](double) { return -1.0; };
  return tau;
}

Reparam cubic_reparam(Interval source, Interval target, double kappa) {
  if (kappa <= -0.5 || kappa >= 1.0) {
    throw DomainError("cubic reparameterization needs kappa in (-1/2, 1)");
  }
  if (source.length() <= 0.0 || target.length() <= 0.0) {
    throw DomainError("cubic reparameterization needs nondegenerate intervals");
  }
  const double sa = source.a, sl = source.length();
  const double ta = target.a, tl = target.length();
  Reparam tau;
  tau.source = source;
  tau.target = target;
  tau.orientation = Orientation::Preserving;
  tau.map = [sa, sl, ta, tl, kappa](double s) {
    const double u = (s - sa) / sl;
    return ta + tl * (u + kappa * (u * u * u - u));
  };
  tau.deriv = [sa, sl, tl, kappa](double s) {
    const double u = (s - sa) / sl;
    return tl * (1.0 + kappa * (3.0 * u * u - 1.0)) / sl;
  };
  return tau;
}

Reparam compose_reparam(const Reparam& first, const Reparam& second) {
  if (!second.target.same(first.source)) {
    throw DomainError("composition mismatch: inner target != outer source");
  }
  Reparam tau;
  tau.source = second.source;
  tau.target = first.target;
  tau.orientation = (first.orientation == second.orientation)
                        ? Orientation::Preserving
                        : Orientation::Reversing;
  auto f = first, g = second;
  tau.map = [f, g](double s) { return f.map(g.map(s)); };
  tau.deriv = [f, g](double s) { return f.deriv(g.map(s)) * g.deriv(s); };
  return tau;
}

Path reparameterize(const Path& gamma, const Reparam& tau) {
  if (!tau.target.same(gamma.domain())) {
    throw DomainError("reparameterization target does not match the path domain");
  }
  Path base = gamma;
  Reparam t = tau;
  std::vector<double> junctions;
  for (double j : gamma.junctions()) junctions.push_back(t.invert(j));
  return Path(
      tau.source, gamma.ambient_dim(), gamma.smoothness(),
      [base, t](double s) { return base.point(t.map(s)); },
      [base, t](double s) {
        return Eigen::VectorXd(t.deriv(s) * base.velocity(t.map(s)));
      },
      std::move(junctions));
}

}  // namespace pathtrans
