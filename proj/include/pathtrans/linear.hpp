#pragma once

#include <functional>

#include "pathtrans/reparam.hpp"
#include "pathtrans/transport.hpp"

namespace pathtrans {

/// Matrix coefficient field along paths. gamma_of(gamma, s) returns the n x n
/// generator of the transport at parameter s. Fields pulled back from a
/// chart-level potential contract the potential with the path velocity and
/// are therefore covariant under any change of path parameter; fields given
/// directly as a function of the parameter are not, unless transformed with
/// reparam_coefficients().
struct ConnectionField {
  int fibre_dim = 0;
  std::function<Eigen::MatrixXcd(const Path&, double)> gamma_of;

  Eigen::MatrixXcd operator()(const Path& gamma, double s) const;
};

/// A coefficient field that ignores the path: s -> G(s).
ConnectionField direct_field(int fibre_dim,
                             std::function<Eigen::MatrixXcd(double)> coeff);

/// Constant coefficient field.
ConnectionField constant_field(const Eigen::MatrixXcd& g0);

/// Pullback of a chart-level matrix potential: the field contracts the
/// components A_i evaluated at gamma(s) with the velocity d(gamma)^i/ds.
/// `components(x)[i]` is the n x n matrix attached to chart direction i.
ConnectionField pullback_field(
    int fibre_dim, int chart_dim,
    std::function<std::vector<Eigen::MatrixXcd>(const Eigen::VectorXd&)> components);

/// An invertible frame along a path: s -> F(s).
struct FrameFunction {
  int fibre_dim = 0;
  std::function<Eigen::MatrixXcd(double)> f_of;

  Eigen::MatrixXcd operator()(double s) const;
};

enum class Scheme {
  ProductOfExponentials,  // generator frozen at the left endpoint, first order
  MidpointMagnus2,        // generator frozen at the step midpoint, second order
};

struct IntegratorConfig {
  int steps = 2000;
  Scheme scheme = Scheme::MidpointMagnus2;
  bool reunitarize = false;

  IntegratorConfig with_steps(int n) const {
    IntegratorConfig c = *this;
    c.steps = n;
    return c;
  }
};

/// Optional per-step observer: called with the parameter reached and the
/// accumulated transport after every step.
using StepObserver =
    std::function<void(double u, const Eigen::MatrixXcd& accumulated)>;

/// Transport matrix along gamma from s to t, carrying the fibre at gamma(s)
/// to the fibre at gamma(t): the solution at u = t of
///     dU/du = -Gamma(u) U,   U(s) = id,
/// computed as an ordered product of per-step exponentials. The integration
/// never steps across a junction of a piecewise path. For t < s the forward
/// transport from t to s is computed and inverted.
TransportMatrix integrate_transport(const ConnectionField& field,
                                    const Path& gamma, double s, double t,
                                    const IntegratorConfig& cfg = {},
                                    const StepObserver& observer = {});

/// Same ODE integrated directly from s to t even when t < s (negative step).
/// Kept as a cross-check against the invert-the-forward-run convention.
TransportMatrix integrate_transport_oriented(const ConnectionField& field,
                                             const Path& gamma, double s,
                                             double t,
                                             const IntegratorConfig& cfg = {});

/// Transport represented through a frame: H(t,s) = F(t)^-1 F(s). Satisfies
/// the composition, neutrality and inversion laws up to arithmetic.
TransportMatrix transport_from_frame(const FrameFunction& frame,
                                     const Path& gamma, double s, double t);

/// Coefficients recovered from a frame: the derivative of the transport in
/// its source parameter at the diagonal, estimated by second-order finite
/// differences (one-sided at domain endpoints). Equals F(s)^-1 F'(s) + O(h^2).
/// Steps below 1e-7 are rejected (cancellation guard).
Eigen::MatrixXcd coefficients_from_frame(const FrameFunction& frame,
                                         const Path& gamma, double s,
                                         double h = 1e-4);

/// The coefficient field of gamma o tau: s -> tau'(s) * Gamma(tau(s)).
ConnectionField reparam_coefficients(const ConnectionField& field,
                                     const Path& gamma, const Reparam& tau);

/// Covariant derivative of a section along gamma at s:
/// sigma'(s) + Gamma(s) sigma(s), with sigma' from central differences of the
/// supplied section samples. h below 1e-7 is rejected.
Eigen::VectorXcd derivation(const ConnectionField& field, const Path& gamma,
                            const std::function<Eigen::VectorXcd(double)>& sigma,
                            double s, double h = 1e-4);

// -- families ----------------------------------------------------------------

/// The transport family resolved by integrating `field` along whatever path
/// it is handed. cfg.steps is the budget for the path's whole domain; a
/// partial span uses a proportional share of it, so the step density (and the
/// accuracy of the worst whole-domain pair) is what the budget pins down.
TransportFamily connection_transport(const ConnectionField& field,
                                     const IntegratorConfig& cfg = {});

/// The family H(t,s) = F(t)^-1 F(s); pure arithmetic, no integration. The
/// frame is a function of the parameter only, so the family is meaningful
/// for the path the frame was fixed along.
TransportFamily frame_transport(const FrameFunction& frame);

}  // namespace pathtrans
