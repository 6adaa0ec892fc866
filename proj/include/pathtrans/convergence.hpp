#pragma once

#include "pathtrans/catalog.hpp"

namespace pathtrans {

struct ConvergenceRow {
  int steps = 0;
  double residual = 0.0;
};

struct ConvergenceResult {
  std::string entry;
  std::string path;
  std::vector<ConvergenceRow> rows;
  double slope = 0.0;  // order of the fitted decay, 0 when exact
  bool exact = false;  // all residuals at the arithmetic floor
  bool pass = false;

  static constexpr double kExactFloor = 1e-13;
  static constexpr double kOrderLow = 1.7;
  static constexpr double kOrderHigh = 2.3;
};

/// Least-squares slope of log(residual) against log(steps), negated so a
/// second-order scheme reports ~2.
double fit_loglog_order(const std::vector<ConvergenceRow>& rows);

/// Integrates the entry's primary path through a cubic change of parameter
/// (so the integrand genuinely varies along the path) at each step count and
/// compares against the closed-form oracle mapped through the
/// reparameterization. Entries whose residuals sit at the arithmetic floor
/// for every step count are reported exact and pass; otherwise the fitted
/// order must land in [1.7, 2.3].
ConvergenceResult measure_convergence(const CatalogEntry& entry,
                                      const std::vector<int>& steps = {250, 500,
                                                                       1000,
                                                                       2000},
                                      double kappa = 0.25);

}  // namespace pathtrans
