#include "pathtrans/laws.hpp"

#include <algorithm>

#include "pathtrans/errors.hpp"

namespace pathtrans {

bool LawReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) {
    return c.pass || c.informational;
  });
}

double LawReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks)
    if (!c.informational) r = std::max(r, c.residual);
  return r;
}

const LawCheck* LawReport::worst() const {
  const LawCheck* w = nullptr;
  for (const auto& c : checks) {
    if (c.informational) continue;
    if (!w || c.residual > w->residual) w = &c;
  }
  return w;
}

void LawReport::add(LawCheck check) { checks.push_back(std::move(check)); }

void LawReport::merge(const LawReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

LawCheck make_check(const std::string& law, const std::string& path,
                    std::vector<double> witness, double residual, double tol) {
  LawCheck c;
  c.law = law;
  c.path = path;
  c.witness = std::move(witness);
  c.residual = residual;
  c.pass = residual <= tol;
  return c;
}

double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).norm();
}

namespace {

void require_grid_inside(const std::vector<double>& grid, const Interval& j,
                         const char* what) {
  for (double s : grid) {
    if (!j.contains(s)) {
      throw DomainError(std::string("grid point outside ") + what);
    }
  }
}

}  // namespace

LawReport check_groupoid(const TransportFamily& family, const Path& gamma,
                         const std::vector<double>& grid, double tol) {
  require_grid_inside(grid, gamma.domain(), "path domain");
  const int n = static_cast<int>(grid.size());

  // Resolve each pair once, independently.
  std::vector<Eigen::MatrixXcd> pair(static_cast<size_t>(n) * n);
  auto at = [&](int i, int j) -> Eigen::MatrixXcd& {
    return pair[static_cast<size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = family(gamma, grid[i], grid[j]).matrix;

  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(family.fibre_dim, family.fibre_dim);

  LawReport report;
  report.suite = "groupoid";
  report.tol = tol;

  double worst = -1.0;
  std::vector<double> w;
  for (int i = 0; i < n; ++i) {
    const double r = frobenius_distance(at(i, i), id);
    if (r > worst) {
      worst = r;
      w = {grid[i]};
    }
  }
  report.add(make_check("identity", "param", w, worst, tol));

  worst = -1.0;
  for (int si = 0; si < n; ++si) {
    for (int ti = 0; ti < n; ++ti) {
      for (int ri = 0; ri < n; ++ri) {
        const double r =
            frobenius_distance(at(ti, ri) * at(si, ti), at(si, ri));
        if (r > worst) {
          worst = r;
          w = {grid[si], grid[ti], grid[ri]};
        }
      }
    }
  }
  report.add(make_check("compose", "param", w, worst, tol));

  worst = -1.0;
  for (int si = 0; si < n; ++si) {
    for (int ti = 0; ti < n; ++ti) {
      const double r =
          frobenius_distance(guarded_inverse(at(si, ti)), at(ti, si));
      if (r > worst) {
        worst = r;
        w = {grid[si], grid[ti]};
      }
    }
  }
  report.add(make_check("inverse", "param", w, worst, tol));
  return report;
}

LawReport check_restriction(const TransportFamily& family, const Path& gamma,
                            const Interval& sub, const std::vector<double>& grid,
                            double tol) {
  if (!gamma.domain().contains(sub)) {
    throw DomainError("restriction interval escapes the path domain");
  }
  require_grid_inside(grid, sub, "restriction interval");
  const Path restricted = restrict(gamma, sub);

  LawReport report;
  report.suite = "restriction";
  report.tol = tol;

  double worst = -1.0;
  std::vector<double> w;
  for (double s : grid) {
    for (double t : grid) {
      const double r = frobenius_distance(family(restricted, s, t).matrix,
                                          family(gamma, s, t).matrix);
      if (r > worst) {
        worst = r;
        w = {s, t};
      }
    }
  }
  report.add(make_check("restriction", "param", w, worst, tol));
  return report;
}

LawReport check_reparam(const TransportFamily& family, const Path& gamma,
                        const Reparam& tau, const std::vector<double>& grid,
                        double tol) {
  if (!tau.target.same(gamma.domain())) {
    throw DomainError("reparameterization target does not match the path domain");
  }
  require_grid_inside(grid, tau.source, "reparameterization source");
  const Path composed = reparameterize(gamma, tau);

  LawReport report;
  report.suite = "reparam";
  report.tol = tol;

  double worst = -1.0;
  std::vector<double> w;
  for (double s : grid) {
    for (double t : grid) {
      const double r = frobenius_distance(
          family(composed, s, t).matrix,
          family(gamma, tau.map(s), tau.map(t)).matrix);
      if (r > worst) {
        worst = r;
        w = {s, t};
      }
    }
  }
  report.add(make_check("reparam", "param", w, worst, tol));
  return report;
}

}  // namespace pathtrans
