#pragma once

#include <string>
#include <vector>

#include "pathtrans/reparam.hpp"
#include "pathtrans/transport.hpp"

namespace pathtrans {

/// One verified law instance: the law's name, the case label, the arg-max
/// witness parameters, the residual and the verdict. Rows flagged
/// informational are recorded (e.g. the swapped-order product residual used
/// to pin composition conventions) but never fail a report.
struct LawCheck {
  std::string law;
  std::string path;
  std::vector<double> witness;
  double residual = 0.0;
  bool pass = true;
  bool informational = false;

  double witness_s() const { return witness.empty() ? 0.0 : witness[0]; }
  double witness_t() const {
    return witness.size() > 1 ? witness[1] : witness_s();
  }
};

/// A batch of law checks sharing a tolerance, assembled deterministically
/// (grid order) so reports serialize byte-identically across runs.
struct LawReport {
  std::string suite;
  double tol = 1e-8;
  std::vector<LawCheck> checks;

  bool passed() const;
  double max_residual() const;
  /// Worst non-informational row, for error messages. Empty report -> null.
  const LawCheck* worst() const;
  void add(LawCheck check);
  void merge(const LawReport& other);
};

/// Helper shared by the harnesses: record `residual` under `law`, passing
/// iff residual <= tol.
LawCheck make_check(const std::string& law, const std::string& path,
                    std::vector<double> witness, double residual, double tol);

double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// -- transport-family law harnesses ------------------------------------------

/// Composition, neutrality and inversion of a transport family on a grid:
/// for all r,s,t in the grid reports the worst of
///   |I(t->r) I(s->t) - I(s->r)|, |I(s->s) - id|, |I(s->t)^-1 - I(t->s)|.
/// Every pair is resolved independently, so integration error is visible.
LawReport check_groupoid(const TransportFamily& family, const Path& gamma,
                         const std::vector<double>& grid, double tol);

/// Restriction invariance: transports of gamma restricted to `sub` must agree
/// with transports of gamma itself over the grid (grid inside sub).
LawReport check_restriction(const TransportFamily& family, const Path& gamma,
                            const Interval& sub, const std::vector<double>& grid,
                            double tol);

/// Reparameterization invariance: transports of gamma o tau at (s,t) must
/// agree with transports of gamma at (tau(s), tau(t)); grid inside tau.source.
LawReport check_reparam(const TransportFamily& family, const Path& gamma,
                        const Reparam& tau, const std::vector<double>& grid,
                        double tol);

}  // namespace pathtrans
