#pragma once

#include <optional>

#include "pathtrans/laws.hpp"
#include "pathtrans/linear.hpp"

namespace pathtrans {

/// An invertible fibre map attached to a whole path: carries the fibre over
/// the path's start point to the fibre over its end point.
struct ParallelMap {
  Path path;
  Eigen::MatrixXcd map;
};

/// A rule assigning a parallel map to every path. Rules coming from transport
/// families evaluate the family over the whole domain; synthetic rules (and
/// deliberately broken ones) are used by the law harness.
struct ParallelTransportRule {
  int fibre_dim = 0;
  std::function<Eigen::MatrixXcd(const Path&)> assign;

  ParallelMap operator()(const Path& gamma) const;
};

/// Sign convention for extracting a segment transport from whole-path maps:
/// +1 when s <= t (use the segment map as-is), -1 when s > t (use its
/// inverse). At s = t both branches are the identity; we fix +1.
inline int segment_sign(double s, double t) { return s <= t ? +1 : -1; }

/// The whole-path map of a transport family.
ParallelMap from_transport(const TransportFamily& family, const Path& gamma);

/// The rule gamma -> family's whole-path map.
ParallelTransportRule rule_from_transport(const TransportFamily& family);

/// Reconstruct the segment transport from initial-segment maps:
///   I(s->t) = phi(gamma|[a,t]) * phi(gamma|[a,s])^-1.
TransportMatrix to_transport(const ParallelTransportRule& rule,
                             const Path& gamma, double s, double t);

/// The transport family resolved through to_transport().
TransportFamily transport_from_rule(const ParallelTransportRule& rule);

/// Segment-map form: phi(gamma|[min,max])^sign(s,t). Agrees with
/// to_transport() whenever the rule satisfies the parallel-transport laws.
TransportMatrix segment_form(const ParallelTransportRule& rule,
                             const Path& gamma, double s, double t);

/// Variant of the reconstruction that shrinks the initial segments with
/// explicit onto-[a,s] reparameterizations instead of restrictions. For a
/// law-abiding rule the choice of shrinking map is immaterial; the harness
/// checks this against to_transport() for both shrink families below.
enum class ShrinkFamily { Affine, Cubic };
TransportMatrix to_transport_shrunk(const ParallelTransportRule& rule,
                                    const Path& gamma, double s, double t,
                                    ShrinkFamily family);

// -- law harness --------------------------------------------------------------

/// Inputs quantified over by the rule-level law checks.
struct AxiomSuite {
  std::vector<NamedPath> paths;
  /// Composable canonical pairs: both on [0,1] with gamma1(1) = gamma2(0).
  std::vector<std::pair<NamedPath, NamedPath>> pairs;
  /// Factories producing a reparameterization onto a given target interval.
  /// Defaults (affine from a stretched source, plus a cubic) are used when
  /// empty.
  std::vector<std::function<Reparam(Interval)>> reparams;
};

/// Residuals of the parallel-transport laws for every suite member:
///   rule-reparam          phi(gamma o tau) = phi(gamma)
///   rule-reverse          phi(reversed gamma) = phi(gamma)^-1
///   rule-product          phi(gamma1 gamma2) = phi(gamma2) phi(gamma1)
///   rule-point            phi(point path) = id
///   rule-reverse-product  phi((gamma1 gamma2)rev) = phi(g1 rev) phi(g2 rev)
/// The swapped product order is recorded as an informational row so the
/// composition convention stays pinned for nonabelian fibres.
LawReport check_axioms(const ParallelTransportRule& rule,
                       const AxiomSuite& suite, double tol);

/// Composition of consecutive segment maps:
/// phi(gamma|[s,t]) phi(gamma|[r,s]) = phi(gamma|[r,t]) for r <= s <= t.
LawReport check_segment_law(const ParallelTransportRule& rule, const Path& gamma,
                            double r, double s, double t, double tol);

/// Round trip between the two representations: the family rebuilt from the
/// whole-path maps of `family` must match `family` on the grid, and the
/// whole-path map of the rebuilt family must match the original rule.
LawReport roundtrip_transport(const TransportFamily& family, const Path& gamma,
                              const std::vector<double>& grid, double tol);

}  // namespace pathtrans
