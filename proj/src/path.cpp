#include "pathtrans/path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pathtrans {

namespace {

constexpr double kDomainSlack = 1e-12;

std::string fmt_interval(const Interval& j) {
  std::ostringstream os;
  os << "[" << j.a << ", " << j.b << "]";
  return os.str();
}

}  // namespace

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("interval endpoints must satisfy a <= b and be finite");
  }
}

std::vector<double> Interval::uniform_grid(int n) const {
  if (n < 1) throw DomainError("grid size must be >= 1");
  std::vector<double> g;
  g.reserve(static_cast<size_t>(n));
  if (n == 1 || length() == 0.0) {
    g.push_back(a);
    for (int i = 1; i < n; ++i) g.push_back(a);
    return g;
  }
  for (int i = 0; i < n; ++i) g.push_back(a + (b - a) * i / (n - 1));
  g.back() = b;
  return g;
}

Path::Path(Interval domain, int ambient_dim, Smoothness smooth, PointFn point,
           PointFn velocity, std::vector<double> junctions)
    : domain_(domain),
      dim_(ambient_dim),
      smooth_(smooth),
      point_(std::move(point)),
      velocity_(std::move(velocity)),
      junctions_(std::move(junctions)) {
  std::sort(junctions_.begin(), junctions_.end());
  // keep only strict interior junctions
  std::erase_if(junctions_, [&](double j) {
    return j <= domain_.a + kDomainSlack || j >= domain_.b - kDomainSlack;
  });
}

double Path::clamp_into_domain(double s) const {
  if (!domain_.contains(s)) {
    throw DomainError("parameter " + std::to_string(s) +
                      " outside path domain " + fmt_interval(domain_));
  }
  return std::clamp(s, domain_.a, domain_.b);
}

Eigen::VectorXd Path::point(double s) const {
  if (!point_) throw DomainError("path has no evaluator");
  return point_(clamp_into_domain(s));
}

Eigen::VectorXd Path::velocity(double s) const {
  if (!velocity_) {
    throw DomainError("path has no velocity evaluator (smoothness class C0)");
  }
  return velocity_(clamp_into_domain(s));
}

// -- operations --------------------------------------------------------------

Path restrict(const Path& gamma, const Interval& sub) {
  if (!gamma.domain().contains(sub)) {
    throw DomainError("restriction interval " + fmt_interval(sub) +
                      " not contained in path domain " +
                      fmt_interval(gamma.domain()));
  }
  Interval clipped(std::max(sub.a, gamma.domain().a),
                   std::min(sub.b, gamma.domain().b));
  Path base = gamma;
  std::vector<double> junctions;
  for (double j : gamma.junctions())
    if (j > clipped.a && j < clipped.b) junctions.push_back(j);
  return Path(
      clipped, gamma.ambient_dim(), gamma.smoothness(),
      [base](double s) { return base.point(s); },
      [base](double s) { return base.velocity(s); }, std::move(junctions));
}

Path reverse_canonical(const Path& gamma) {
  if (gamma.reversed_from_) return *gamma.reversed_from_;
  const double a = gamma.domain().a;
  const double b = gamma.domain().b;
  Path base = gamma;
  std::vector<double> junctions;
  for (double j : gamma.junctions()) junctions.push_back(a + b - j);
  Path reversed(
      gamma.domain(), gamma.ambient_dim(), gamma.smoothness(),
      [base, a, b](double s) { return base.point(a + b - s); },
      [base, a, b](double s) {
        return Eigen::VectorXd(-base.velocity(a + b - s));
      },
      std::move(junctions));
  reversed.reversed_from_ = std::make_shared<Path>(gamma);
  return reversed;
}

Path concat_canonical(const Path& gamma1, const Path& gamma2,
                      double point_tol) {
  const Interval unit(0.0, 1.0);
  if (!gamma1.domain().same(unit) || !gamma2.domain().same(unit)) {
    throw DomainError(
        "canonical product requires both factors on [0,1]; reparameterize first");
  }
  if (gamma1.ambient_dim() != gamma2.ambient_dim()) {
    throw DomainError("canonical product factors live in different spaces");
  }
  const Eigen::VectorXd jump = gamma1.end() - gamma2.start();
  if (jump.norm() > point_tol) {
    throw DomainError("endpoint mismatch at the junction: |gamma1(1)-gamma2(0)| = " +
                      std::to_string(jump.norm()));
  }

  Smoothness smooth = Smoothness::C0;
  if (gamma1.smoothness() == Smoothness::C1 &&
      gamma2.smoothness() == Smoothness::C1) {
    const Eigen::VectorXd v1 = gamma1.velocity(1.0);
    const Eigen::VectorXd v2 = gamma2.velocity(0.0);
    if ((v1 - v2).norm() <= point_tol * (1.0 + v1.norm())) smooth = Smoothness::C1;
  }

  std::vector<double> junctions{0.5};
  for (double j : gamma1.junctions()) junctions.push_back(j / 2.0);
  for (double j : gamma2.junctions()) junctions.push_back(0.5 + j / 2.0);

  Path g1 = gamma1, g2 = gamma2;
  return Path(
      unit, gamma1.ambient_dim(), smooth,
      [g1, g2](double s) {
        return s <= 0.5 ? g1.point(2.0 * s) : g2.point(2.0 * s - 1.0);
      },
      [g1, g2](double s) {
        Eigen::VectorXd v =
            s < 0.5 ? g1.velocity(2.0 * s) : g2.velocity(2.0 * s - 1.0);
        return Eigen::VectorXd(2.0 * v);
      },
      std::move(junctions));
}

Path point_path(const Eigen::VectorXd& x, double a) {
  Eigen::VectorXd x0 = x;
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(x.size());
  return Path(
      Interval(a, a), static_cast<int>(x.size()), Smoothness::C1,
      [x0](double) { return x0; }, [zero](double) { return zero; });
}

// -- registry ----------------------------------------------------------------

Path line_path(const Eigen::VectorXd& from, const Eigen::VectorXd& to,
               Interval domain) {
  if (from.size() != to.size()) {
    throw DomainError("line endpoints live in different spaces");
  }
  if (domain.length() <= 0.0) {
    throw DomainError("line path needs a nondegenerate domain");
  }
  Eigen::VectorXd p0 = from;
  Eigen::VectorXd dir = (to - from) / domain.length();
  const double a = domain.a;
  return Path(
      domain, static_cast<int>(from.size()), Smoothness::C1,
      [p0, dir, a](double s) { return Eigen::VectorXd(p0 + (s - a) * dir); },
      [dir](double) { return dir; });
}

Path circle_path(const Eigen::Vector2d& center, double radius, Interval domain) {
  Eigen::Vector2d c = center;
  return Path(
      domain, 2, Smoothness::C1,
      [c, radius](double s) {
        return Eigen::VectorXd(
            c + radius * Eigen::Vector2d(std::cos(s), std::sin(s)));
      },
      [radius](double s) {
        return Eigen::VectorXd(
            radius * Eigen::Vector2d(-std::sin(s), std::cos(s)));
      });
}

Path latitude_path(double theta0, Interval domain) {
  return Path(
      domain, 2, Smoothness::C1,
      [theta0](double s) { return Eigen::VectorXd(Eigen::Vector2d(theta0, s)); },
      [](double) { return Eigen::VectorXd(Eigen::Vector2d(0.0, 1.0)); });
}

Path longitude_path(double phi0, Interval domain) {
  return Path(
      domain, 2, Smoothness::C1,
      [phi0](double s) { return Eigen::VectorXd(Eigen::Vector2d(s, phi0)); },
      [](double) { return Eigen::VectorXd(Eigen::Vector2d(1.0, 0.0)); });
}

Path polyline_path(const std::vector<Eigen::VectorXd>& vertices,
                   Interval domain) {
  if (vertices.size() < 2) throw DomainError("polyline needs >= 2 vertices");
  if (domain.length() <= 0.0) {
    throw DomainError("polyline needs a nondegenerate domain");
  }
  const int nseg = static_cast<int>(vertices.size()) - 1;
  std::vector<Eigen::VectorXd> verts = vertices;
  const double a = domain.a, len = domain.length();

  auto locate = [nseg, a, len](double s) {
    double u = (s - a) / len * nseg;  // in [0, nseg]
    int k = std::min(static_cast<int>(std::floor(u)), nseg - 1);
    k = std::max(k, 0);
    return std::pair<int, double>(k, u - k);
  };

  std::vector<double> junctions;
  for (int k = 1; k < nseg; ++k) junctions.push_back(a + len * k / nseg);

  return Path(
      domain, static_cast<int>(vertices.front().size()), Smoothness::C0,
      [verts, locate](double s) {
        auto [k, f] = locate(s);
        return Eigen::VectorXd((1.0 - f) * verts[k] + f * verts[k + 1]);
      },
      [verts, locate, nseg, len](double s) {
        auto [k, f] = locate(s);
        (void)f;
        return Eigen::VectorXd((verts[k + 1] - verts[k]) * (nseg / len));
      },
      std::move(junctions));
}

Path sampled_path(const std::vector<double>& params,
                  const std::vector<Eigen::VectorXd>& points) {
  const size_t n = params.size();
  if (n < 2 || points.size() != n) {
    throw DomainError("sampled path needs >= 2 samples with matching params");
  }
  for (size_t i = 1; i < n; ++i) {
    if (!(params[i] > params[i - 1])) {
      throw DomainError("sample parameters must be strictly increasing");
    }
  }

  // Hermite tangents from finite differences, one-sided at the ends.
  std::vector<Eigen::VectorXd> tangents(n);
  tangents[0] = (points[1] - points[0]) / (params[1] - params[0]);
  tangents[n - 1] =
      (points[n - 1] - points[n - 2]) / (params[n - 1] - params[n - 2]);
  for (size_t i = 1; i + 1 < n; ++i) {
    tangents[i] =
        (points[i + 1] - points[i - 1]) / (params[i + 1] - params[i - 1]);
  }

  std::vector<double> sv = params;
  std::vector<Eigen::VectorXd> pv = points;
  auto segment = [sv](double s) {
    auto it = std::upper_bound(sv.begin(), sv.end(), s);
    size_t k = static_cast<size_t>(std::distance(sv.begin(), it));
    if (k == 0) k = 1;
    if (k >= sv.size()) k = sv.size() - 1;
    return k - 1;
  };

  auto eval = [sv, pv, tangents, segment](double s) {
    size_t k = segment(s);
    const double h = sv[k + 1] - sv[k];
    const double u = (s - sv[k]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return Eigen::VectorXd((2 * u3 - 3 * u2 + 1) * pv[k] +
                           (u3 - 2 * u2 + u) * h * tangents[k] +
                           (-2 * u3 + 3 * u2) * pv[k + 1] +
                           (u3 - u2) * h * tangents[k + 1]);
  };
  auto deriv = [sv, pv, tangents, segment](double s) {
    size_t k = segment(s);
    const double h = sv[k + 1] - sv[k];
    const double u = (s - sv[k]) / h;
    const double u2 = u * u;
    return Eigen::VectorXd(((6 * u2 - 6 * u) * pv[k] +
                            (3 * u2 - 4 * u + 1) * h * tangents[k] +
                            (-6 * u2 + 6 * u) * pv[k + 1] +
                            (3 * u2 - 2 * u) * h * tangents[k + 1]) /
                           h);
  };

  return Path(Interval(params.front(), params.back()),
              static_cast<int>(points.front().size()), Smoothness::C1, eval,
              deriv);
}

}  // namespace pathtrans
