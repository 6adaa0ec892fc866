#include "pathtrans/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "pathtrans/errors.hpp"
#include "pathtrans/laws.hpp"

namespace pathtrans {

double fit_loglog_order(const std::vector<ConvergenceRow>& rows) {
  if (rows.size() < 2) throw DomainError("order fit needs >= 2 rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.steps));
    const double y = std::log(std::max(r.residual, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceResult measure_convergence(const CatalogEntry& entry,
                                      const std::vector<int>& steps,
                                      double kappa) {
  if (steps.size() < 2) throw DomainError("convergence study needs >= 2 step counts");
  const NamedPath& np = entry.primary_path();
  const Interval dom = np.path.domain();
  const Reparam tau = cubic_reparam(dom, dom, kappa);
  const Path bent = reparameterize(np.path, tau);
  const Eigen::MatrixXcd reference =
      entry.oracle(np, tau.map(dom.a), tau.map(dom.b));

  ConvergenceResult result;
  result.entry = entry.name;
  result.path = np.name;
  for (int n : steps) {
    IntegratorConfig cfg;
    cfg.steps = n;
    const Eigen::MatrixXcd h =
        integrate_transport(entry.connection, bent, dom.a, dom.b, cfg).matrix;
    result.rows.push_back({n, frobenius_distance(h, reference)});
  }

  result.exact = std::all_of(
      result.rows.begin(), result.rows.end(),
      [](const ConvergenceRow& r) { return r.residual <= ConvergenceResult::kExactFloor; });
  if (result.exact) {
    result.slope = 0.0;
    result.pass = true;
  } else {
    result.slope = fit_loglog_order(result.rows);
    result.pass = result.slope >= ConvergenceResult::kOrderLow &&
                  result.slope <= ConvergenceResult::kOrderHigh;
  }
  return result;
}

}  // namespace pathtrans
