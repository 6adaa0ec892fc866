#include "pathtrans/suites.hpp"

#include <algorithm>

#include "pathtrans/errors.hpp"

namespace pathtrans {

namespace {

bool entry_is_real(const CatalogEntry& entry) {
  // tensor lifts act on a real fibre
  return entry.name == "flat" || entry.name == "constant_gamma" ||
         entry.name == "sphere_levi_civita";
}

LawReport with_labels(LawReport report, const std::string& entry_name,
                      const std::string& path_name) {
  for (auto& c : report.checks) {
    c.path = entry_name + "/" + path_name +
             (c.path.empty() || c.path == "param" ? "" : "/" + c.path);
  }
  return report;
}

LawReport groupoid_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam = connection_transport(e.connection, opt.integrator);
  LawReport out;
  out.suite = "groupoid";
  out.tol = opt.tol;
  for (const auto& np : e.paths) {
    const auto grid = np.path.domain().uniform_grid(opt.grid_n);
    out.merge(with_labels(check_groupoid(fam, np.path, grid, opt.tol), e.name,
                          np.name));
  }
  return out;
}

LawReport restriction_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam = connection_transport(e.connection, opt.integrator);
  const NamedPath& np = e.primary_path();
  const Interval dom = np.path.domain();
  const double quarter = dom.length() / 4.0;
  const Interval sub{dom.a + quarter, dom.b - quarter};
  LawReport out;
  out.suite = "restriction";
  out.tol = opt.tol;
  out.merge(with_labels(check_restriction(fam, np.path, sub,
                                          sub.uniform_grid(opt.grid_n), opt.tol),
                        e.name, np.name));
  return out;
}

LawReport reparam_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam =
      connection_transport(e.connection, opt.reparam_integrator());
  const NamedPath& np = e.primary_path();
  const Interval dom = np.path.domain();
  LawReport out;
  out.suite = "reparam";
  out.tol = opt.tol;

  const Reparam affine = affine_reparam({0.0, dom.length() / 2.0}, dom);
  LawReport ra = check_reparam(fam, np.path, affine,
                               affine.source.uniform_grid(opt.grid_n), opt.tol);
  for (auto& c : ra.checks) c.path = e.name + "/" + np.name + "/affine";
  out.merge(ra);

  const Reparam cubic = cubic_reparam(dom, dom);
  LawReport rc = check_reparam(fam, np.path, cubic,
                               cubic.source.uniform_grid(opt.grid_n), opt.tol);
  for (auto& c : rc.checks) c.path = e.name + "/" + np.name + "/cubic";
  out.merge(rc);
  return out;
}

LawReport parallel_rule_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam =
      connection_transport(e.connection, opt.reparam_integrator());
  const ParallelTransportRule rule = rule_from_transport(fam);
  AxiomSuite suite;
  suite.paths = e.paths;
  if (e.canonical_pair) suite.pairs.push_back(*e.canonical_pair);
  LawReport report = check_axioms(rule, suite, opt.tol);
  for (auto& c : report.checks) c.path = e.name + "/" + c.path;
  return report;
}

LawReport segment_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam = connection_transport(e.connection, opt.integrator);
  const ParallelTransportRule rule = rule_from_transport(fam);
  const NamedPath& np = e.primary_path();
  const Interval dom = np.path.domain();
  const double len = dom.length();
  LawReport report =
      check_segment_law(rule, np.path, dom.a + 0.25 * len, dom.a + 0.5 * len,
                        dom.a + 0.75 * len, opt.tol);
  for (auto& c : report.checks) c.path = e.name + "/" + np.name;
  return report;
}

LawReport group_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  if (!e.potential || !e.canonical_pair) {
    throw DomainError("entry '" + e.name + "' has no gauge potential");
  }
  const auto& [np1, np2] = *e.canonical_pair;
  const Reparam tau = cubic_reparam(np1.path.domain(), np1.path.domain());
  LawReport report =
      check_group_laws(*e.potential, np1.path, np2.path, tau, opt.tol,
                       opt.reparam_integrator());
  for (auto& c : report.checks) c.path = e.name + "/" + c.path;
  return report;
}

LawReport infinitesimal_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  if (!e.potential) {
    throw DomainError("entry '" + e.name + "' has no gauge potential");
  }
  const Eigen::VectorXd x = e.primary_path().path.start();
  Eigen::VectorXd dx = Eigen::VectorXd::Ones(x.size());
  dx *= 1e-4 / dx.norm();
  LawReport report =
      infinitesimal_check(*e.potential, x, dx, opt.tol, opt.integrator);
  for (auto& c : report.checks) c.path = e.name + "/" + c.path;
  return report;
}

LawReport tensor_algebra_suite(const CatalogEntry& e, const SuiteOptions& opt) {
  const TransportFamily fam = connection_transport(e.connection, opt.integrator);
  const Eigen::MatrixXcd h = from_transport(fam, e.primary_path().path).map;
  LawReport report = check_tensor_algebra(h, 3, 1e-12, 50);
  for (auto& c : report.checks)
    c.path = e.name + "/" + e.primary_path().name + "/" + c.path;
  report.tol = 1e-12;
  return report;
}

LawReport tensor_orientation_suite(const CatalogEntry& e,
                                   const SuiteOptions& opt) {
  if (!e.canonical_pair) {
    throw DomainError("entry '" + e.name + "' has no canonical pair");
  }
  const TransportFamily fam = connection_transport(e.connection, opt.integrator);
  const NamedPath& np = e.primary_path();
  const Interval dom = np.path.domain();
  // affine maps with a stretched source change the parameter speed (so the
  // checks are not vacuous) while keeping the integration error at the
  // arithmetic floor; the nonaffine covariance lives in the reparam suite
  const Reparam preserve = affine_reparam({0.0, dom.length() / 2.0}, dom);
  const Reparam reverse = affine_reparam(dom, dom, Orientation::Reversing);
  LawReport report = orientation_behavior(
      fam, np.path, e.canonical_pair->first.path, e.canonical_pair->second.path,
      preserve, reverse, 3, opt.tol);
  for (auto& c : report.checks) c.path = e.name + "/" + np.name + "/" + c.path;
  return report;
}

}  // namespace

std::vector<std::string> all_suite_names() {
  return {"groupoid",     "restriction",   "reparam",
          "parallel-rule", "segment-law",   "group-laws",
          "infinitesimal", "tensor-algebra", "tensor-orientation"};
}

std::vector<std::string> applicable_suites(const CatalogEntry& entry) {
  std::vector<std::string> names = {"groupoid", "restriction", "reparam",
                                    "parallel-rule", "segment-law"};
  if (entry.potential) {
    names.push_back("group-laws");
    names.push_back("infinitesimal");
  }
  if (entry_is_real(entry)) {
    names.push_back("tensor-algebra");
    if (entry.canonical_pair) names.push_back("tensor-orientation");
  }
  return names;
}

std::vector<LawReport> run_entry_suites(const CatalogEntry& entry,
                                        const std::vector<std::string>& which,
                                        const SuiteOptions& opt, bool strict) {
  const auto applicable = applicable_suites(entry);
  std::vector<LawReport> reports;
  for (const auto& name : which) {
    const auto known = all_suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw DomainError("unknown law suite '" + name + "'");
    }
    if (std::find(applicable.begin(), applicable.end(), name) ==
        applicable.end()) {
      if (strict) {
        throw DomainError("suite '" + name + "' not applicable to entry '" +
                          entry.name + "'");
      }
      continue;
    }
    if (name == "groupoid") reports.push_back(groupoid_suite(entry, opt));
    if (name == "restriction") reports.push_back(restriction_suite(entry, opt));
    if (name == "reparam") reports.push_back(reparam_suite(entry, opt));
    if (name == "parallel-rule") reports.push_back(parallel_rule_suite(entry, opt));
    if (name == "segment-law") reports.push_back(segment_suite(entry, opt));
    if (name == "group-laws") reports.push_back(group_suite(entry, opt));
    if (name == "infinitesimal") reports.push_back(infinitesimal_suite(entry, opt));
    if (name == "tensor-algebra") reports.push_back(tensor_algebra_suite(entry, opt));
    if (name == "tensor-orientation") {
      reports.push_back(tensor_orientation_suite(entry, opt));
    }
  }
  return reports;
}

std::vector<std::string> mock_names() {
  return {"mock_parameter_clock", "mock_domain_length", "mock_rule_domain_length"};
}

std::vector<LawReport> run_mock_suites(const std::string& mock_name,
                                       const SuiteOptions& opt) {
  // small enough that exponentials over the whole domain stay O(1), so the
  // mocks fail only the law they are built to violate
  Eigen::MatrixXcd g0(2, 2);
  g0 << 0.01, 0.08, -0.03, 0.02;
  const Path circle = circle_path(Eigen::Vector2d(0, 0), 1.0);
  const auto grid = circle.domain().uniform_grid(opt.grid_n);
  const Interval sub{EIGEN_PI / 2.0, 3.0 * EIGEN_PI / 2.0};

  std::vector<LawReport> reports;
  auto label = [&mock_name](LawReport r) {
    for (auto& c : r.checks) c.path = mock_name + "/circle";
    return r;
  };

  if (mock_name == "mock_parameter_clock" || mock_name == "mock_domain_length") {
    const TransportFamily fam = mock_name == "mock_parameter_clock"
                                    ? mock_parameter_clock(g0)
                                    : mock_domain_length(g0);
    reports.push_back(label(check_groupoid(fam, circle, grid, opt.tol)));
    reports.push_back(label(check_restriction(
        fam, circle, sub, sub.uniform_grid(opt.grid_n), opt.tol)));
    reports.push_back(label(check_reparam(
        fam, circle, cubic_reparam(circle.domain(), circle.domain()),
        circle.domain().uniform_grid(opt.grid_n), opt.tol)));
    return reports;
  }
  if (mock_name == "mock_rule_domain_length") {
    AxiomSuite suite;
    suite.paths = {{"circle", circle}};
    reports.push_back(label(check_axioms(mock_rule_domain_length(g0), suite,
                                         opt.tol)));
    return reports;
  }
  throw DomainError("unknown negative control '" + mock_name + "'");
}

}  // namespace pathtrans
