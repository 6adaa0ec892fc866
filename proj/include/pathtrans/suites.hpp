#pragma once

#include "pathtrans/catalog.hpp"
#include "pathtrans/convergence.hpp"
#include "pathtrans/parallel.hpp"
#include "pathtrans/tensor.hpp"

namespace pathtrans {

/// Shared knobs for the batch law runners used by the CLI and the
/// verification suite.
struct SuiteOptions {
  int grid_n = 9;
  double tol = 1e-8;
  IntegratorConfig integrator;  // steps = 2000 by default
  /// Step multiplier for checks that integrate through a nonaffine change of
  /// parameter, where the integrand genuinely varies along the path. The
  /// default keeps the worst catalog case a factor ~4 below the 1e-8 bar.
  int reparam_step_factor = 8;

  IntegratorConfig reparam_integrator() const {
    return integrator.with_steps(integrator.steps * reparam_step_factor);
  }
};

/// All suite names understood by run_entry_suites, in run order.
std::vector<std::string> all_suite_names();

/// Suites applicable to a given entry (group suites need a potential, tensor
/// suites a real fibre).
std::vector<std::string> applicable_suites(const CatalogEntry& entry);

/// Run the named law suites against a catalog entry. Unknown names throw
/// DomainError; names not applicable to the entry are skipped silently when
/// they came from all_suite_names(), or throw when requested explicitly
/// (strict = true).
std::vector<LawReport> run_entry_suites(const CatalogEntry& entry,
                                        const std::vector<std::string>& which,
                                        const SuiteOptions& opt,
                                        bool strict = false);

/// Law reports for the negative-control transports; these are expected to
/// FAIL their target law, which guards the harness against vacuous passes.
std::vector<LawReport> run_mock_suites(const std::string& mock_name,
                                       const SuiteOptions& opt);

std::vector<std::string> mock_names();

}  // namespace pathtrans
