#include "pathtrans/parallel.hpp"

#include <algorithm>
#include <cmath>

#include "pathtrans/errors.hpp"

namespace pathtrans {

ParallelMap ParallelTransportRule::operator()(const Path& gamma) const {
  if (!assign) throw DomainError("parallel transport rule has no assignment");
  ParallelMap pm;
  pm.path = gamma;
  pm.map = assign(gamma);
  if (!pm.map.allFinite()) {
    throw NumericalError("parallel transport rule produced non-finite entries");
  }
  return pm;
}

ParallelMap from_transport(const TransportFamily& family, const Path& gamma) {
  ParallelMap pm;
  pm.path = gamma;
  pm.map = family(gamma, gamma.domain().a, gamma.domain().b).matrix;
  return pm;
}

ParallelTransportRule rule_from_transport(const TransportFamily& family) {
  ParallelTransportRule rule;
  rule.fibre_dim = family.fibre_dim;
  rule.assign = [family](const Path& gamma) {
    return family(gamma, gamma.domain().a, gamma.domain().b).matrix;
  };
  return rule;
}

TransportMatrix to_transport(const ParallelTransportRule& rule,
                             const Path& gamma, double s, double t) {
  const double a = gamma.domain().a;
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }
  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  const Eigen::MatrixXcd head_t = rule(restrict(gamma, {a, std::max(a, t)})).map;
  const Eigen::MatrixXcd head_s = rule(restrict(gamma, {a, std::max(a, s)})).map;
  m.matrix = head_t * guarded_inverse(head_s);
  return m;
}

TransportFamily transport_from_rule(const ParallelTransportRule& rule) {
  TransportFamily fam;
  fam.fibre_dim = rule.fibre_dim;
  fam.resolver = [rule](const Path& gamma, double s, double t) {
    return to_transport(rule, gamma, s, t).matrix;
  };
  return fam;
}

TransportMatrix segment_form(const ParallelTransportRule& rule,
                             const Path& gamma, double s, double t) {
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }
  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  const Eigen::MatrixXcd seg =
      rule(restrict(gamma, {std::min(s, t), std::max(s, t)})).map;
  m.matrix = segment_sign(s, t) > 0 ? seg : guarded_inverse(seg);
  return m;
}

TransportMatrix to_transport_shrunk(const ParallelTransportRule& rule,
                                    const Path& gamma, double s, double t,
                                    ShrinkFamily family) {
  const double a = gamma.domain().a;
  auto initial_segment = [&](double end) -> Eigen::MatrixXcd {
    if (end <= a) return rule(point_path(gamma.start(), a)).map;
    const Reparam tau = family == ShrinkFamily::Affine
                            ? affine_reparam(gamma.domain(), {a, end})
                            : cubic_reparam(gamma.domain(), {a, end});
    return rule(reparameterize(restrict(gamma, {a, end}), tau)).map;
  };
  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  m.matrix = initial_segment(t) * guarded_inverse(initial_segment(s));
  return m;
}

namespace {

std::vector<std::function<Reparam(Interval)>> default_reparams() {
  return {
      [](Interval target) {
        return affine_reparam({0.0, 2.0}, target);
      },
      [](Interval target) {
        const double pad = std::max(1.0, target.length());
        return cubic_reparam({target.a, target.a + pad}, target);
      },
  };
}

}  // namespace

LawReport check_axioms(const ParallelTransportRule& rule,
                       const AxiomSuite& suite, double tol) {
  LawReport report;
  report.suite = "parallel-rule";
  report.tol = tol;
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(rule.fibre_dim, rule.fibre_dim);

  const auto reparams =
      suite.reparams.empty() ? default_reparams() : suite.reparams;

  for (const auto& np : suite.paths) {
    const Eigen::MatrixXcd phi = rule(np.path).map;

    int k = 0;
    for (const auto& make_tau : reparams) {
      const Reparam tau = make_tau(np.path.domain());
      const double r =
          frobenius_distance(rule(reparameterize(np.path, tau)).map, phi);
      report.add(make_check("rule-reparam", np.name + "/tau" + std::to_string(k),
                            {np.path.domain().a, np.path.domain().b}, r, tol));
      ++k;
    }

    const double rev = frobenius_distance(
        rule(reverse_canonical(np.path)).map * phi, id);
    report.add(make_check("rule-reverse", np.name,
                          {np.path.domain().a, np.path.domain().b}, rev, tol));

    const double pt = frobenius_distance(
        rule(point_path(np.path.start(), np.path.domain().a)).map, id);
    report.add(make_check("rule-point", np.name, {np.path.domain().a}, pt, tol));
  }

  for (const auto& [np1, np2] : suite.pairs) {
    const std::string label = np1.name + "*" + np2.name;
    const Path product = concat_canonical(np1.path, np2.path);
    const Eigen::MatrixXcd phi12 = rule(product).map;
    const Eigen::MatrixXcd phi1 = rule(np1.path).map;
    const Eigen::MatrixXcd phi2 = rule(np2.path).map;

    report.add(make_check("rule-product", label, {0.0, 1.0},
                          frobenius_distance(phi12, phi2 * phi1), tol));
    LawCheck swapped =
        make_check("rule-product-swapped", label, {0.0, 1.0},
                   frobenius_distance(phi12, phi1 * phi2), tol);
    swapped.informational = true;
    report.add(std::move(swapped));

    const double revprod = frobenius_distance(
        rule(reverse_canonical(product)).map,
        rule(reverse_canonical(np1.path)).map *
            rule(reverse_canonical(np2.path)).map);
    report.add(make_check("rule-reverse-product", label, {0.0, 1.0}, revprod, tol));
  }

  return report;
}

LawReport check_segment_law(const ParallelTransportRule& rule, const Path& gamma,
                            double r, double s, double t, double tol) {
  if (!(r <= s && s <= t)) {
    throw DomainError("segment law needs r <= s <= t");
  }
  if (!gamma.domain().contains(r) || !gamma.domain().contains(t)) {
    throw DomainError("segment parameters outside the path domain");
  }
  auto seg = [&](double lo, double hi) {
    if (hi - lo <= 0.0) return rule(point_path(gamma.point(lo), lo)).map;
    return rule(restrict(gamma, {lo, hi})).map;
  };
  LawReport report;
  report.suite = "segment-law";
  report.tol = tol;
  const double res =
      frobenius_distance(seg(s, t) * seg(r, s), seg(r, t));
  report.add(make_check("segment-composition", "param", {r, s, t}, res, tol));
  return report;
}

LawReport roundtrip_transport(const TransportFamily& family, const Path& gamma,
                              const std::vector<double>& grid, double tol) {
  LawReport report;
  report.suite = "roundtrip";
  report.tol = tol;

  const ParallelTransportRule rule = rule_from_transport(family);

  double worst = -1.0;
  std::vector<double> w;
  for (double s : grid) {
    for (double t : grid) {
      const double r = frobenius_distance(to_transport(rule, gamma, s, t).matrix,
                                          family(gamma, s, t).matrix);
      if (r > worst) {
        worst = r;
        w = {s, t};
      }
    }
  }
  report.add(make_check("roundtrip-transport", "param", w, worst, tol));

  // Rule -> family -> rule: the rebuilt whole-path map against the original.
  const TransportFamily rebuilt = transport_from_rule(rule);
  const double rule_res = frobenius_distance(
      from_transport(rebuilt, gamma).map, rule(gamma).map);
  report.add(make_check("roundtrip-rule", "param",
                        {gamma.domain().a, gamma.domain().b}, rule_res, tol));
  return report;
}

}  // namespace pathtrans
