#include "pathtrans/linear.hpp"

#include <algorithm>
#include <cmath>

#include "pathtrans/errors.hpp"
#include "pathtrans/expm.hpp"

namespace pathtrans {

Eigen::MatrixXcd ConnectionField::operator()(const Path& gamma, double s) const {
  if (!gamma_of) throw DomainError("connection field has no evaluator");
  Eigen::MatrixXcd g = gamma_of(gamma, s);
  if (g.rows() != fibre_dim || g.cols() != fibre_dim) {
    throw NumericalError("connection field produced a matrix of wrong shape");
  }
  if (!g.allFinite()) {
    throw NumericalError("connection field produced non-finite coefficients");
  }
  return g;
}

ConnectionField direct_field(int fibre_dim,
                             std::function<Eigen::MatrixXcd(double)> coeff) {
  ConnectionField f;
  f.fibre_dim = fibre_dim;
  f.gamma_of = [coeff = std::move(coeff)](const Path&, double s) {
    return coeff(s);
  };
  return f;
}

ConnectionField constant_field(const Eigen::MatrixXcd& g0) {
  Eigen::MatrixXcd g = g0;
  return direct_field(static_cast<int>(g0.rows()),
                      [g](double) { return g; });
}

ConnectionField pullback_field(
    int fibre_dim, int chart_dim,
    std::function<std::vector<Eigen::MatrixXcd>(const Eigen::VectorXd&)> components) {
  ConnectionField f;
  f.fibre_dim = fibre_dim;
  f.gamma_of = [fibre_dim, chart_dim, components = std::move(components)](
                   const Path& gamma, double s) {
    if (gamma.ambient_dim() != chart_dim) {
      throw DomainError("path ambient dimension does not match the potential");
    }
    const Eigen::VectorXd x = gamma.point(s);
    const Eigen::VectorXd v = gamma.velocity(s);
    const auto a = components(x);
    if (static_cast<int>(a.size()) != chart_dim) {
      throw NumericalError("potential produced wrong number of components");
    }
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(fibre_dim, fibre_dim);
    for (int i = 0; i < chart_dim; ++i) g += a[i] * v[i];
    return g;
  };
  return f;
}

Eigen::MatrixXcd FrameFunction::operator()(double s) const {
  if (!f_of) throw DomainError("frame has no evaluator");
  return f_of(s);
}

namespace {

// One smooth piece: ordered product of per-step exponentials over [from, to]
// (from < to, no junction strictly inside), multiplied into acc from the left.
void integrate_piece(const ConnectionField& field, const Path& gamma,
                     double from, double to, int steps, const IntegratorConfig& cfg,
                     Eigen::MatrixXcd& acc, const StepObserver& observer) {
  const double dt = (to - from) / steps;
  for (int k = 0; k < steps; ++k) {
    const double u0 = from + dt * k;
    const double sample =
        cfg.scheme == Scheme::MidpointMagnus2 ? u0 + dt / 2.0 : u0;
    acc = matrix_exp(-dt * field(gamma, sample)) * acc;
    if (cfg.reunitarize) acc = polar_unitary(acc);
    if (observer) observer(u0 + dt, acc);
  }
}

Eigen::MatrixXcd integrate_forward(const ConnectionField& field,
                                   const Path& gamma, double s, double t,
                                   const IntegratorConfig& cfg,
                                   const StepObserver& observer) {
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Identity(field.fibre_dim, field.fibre_dim);
  if (t == s) return acc;

  // Split at junctions so no step straddles a velocity jump.
  std::vector<double> cuts{s};
  for (double j : gamma.junctions())
    if (j > s && j < t) cuts.push_back(j);
  cuts.push_back(t);

  const double total = t - s;
  for (size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double len = cuts[p + 1] - cuts[p];
    const int steps = std::max(
        1, static_cast<int>(std::lround(cfg.steps * len / total)));
    integrate_piece(field, gamma, cuts[p], cuts[p + 1], steps, cfg, acc,
                    observer);
  }
  if (!acc.allFinite()) {
    throw NumericalError("transport integration produced non-finite values");
  }
  return acc;
}

}  // namespace

TransportMatrix integrate_transport(const ConnectionField& field,
                                    const Path& gamma, double s, double t,
                                    const IntegratorConfig& cfg,
                                    const StepObserver& observer) {
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }
  if (cfg.steps < 1) throw DomainError("integrator needs steps >= 1");

  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  if (t >= s) {
    m.matrix = integrate_forward(field, gamma, s, t, cfg, observer);
  } else {
    m.matrix = guarded_inverse(integrate_forward(field, gamma, t, s, cfg, observer));
  }
  return m;
}

TransportMatrix integrate_transport_oriented(const ConnectionField& field,
                                             const Path& gamma, double s,
                                             double t,
                                             const IntegratorConfig& cfg) {
  if (t >= s) return integrate_transport(field, gamma, s, t, cfg);
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }

  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Identity(field.fibre_dim, field.fibre_dim);
  std::vector<double> cuts{s};
  for (auto it = gamma.junctions().rbegin(); it != gamma.junctions().rend(); ++it)
    if (*it < s && *it > t) cuts.push_back(*it);
  cuts.push_back(t);

  const double total = s - t;
  for (size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double len = cuts[p] - cuts[p + 1];
    const int steps =
        std::max(1, static_cast<int>(std::lround(cfg.steps * len / total)));
    const double dt = (cuts[p + 1] - cuts[p]) / steps;  // negative
    for (int k = 0; k < steps; ++k) {
      const double u0 = cuts[p] + dt * k;
      const double sample =
          cfg.scheme == Scheme::MidpointMagnus2 ? u0 + dt / 2.0 : u0;
      acc = matrix_exp(-dt * field(gamma, sample)) * acc;
      if (cfg.reunitarize) acc = polar_unitary(acc);
    }
  }

  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  m.matrix = std::move(acc);
  if (!m.matrix.allFinite()) {
    throw NumericalError("transport integration produced non-finite values");
  }
  return m;
}

TransportMatrix transport_from_frame(const FrameFunction& frame,
                                     const Path& gamma, double s, double t) {
  if (!gamma.domain().contains(s) || !gamma.domain().contains(t)) {
    throw DomainError("transport parameters outside the path domain");
  }
  TransportMatrix m;
  m.source_param = s;
  m.target_param = t;
  m.matrix = guarded_inverse(frame(t)) * frame(s);
  return m;
}

Eigen::MatrixXcd coefficients_from_frame(const FrameFunction& frame,
                                         const Path& gamma, double s,
                                         double h) {
  if (h < 1e-7) {
    throw NumericalError("finite-difference step below the cancellation guard");
  }
  const Interval dom = gamma.domain();
  if (!dom.contains(s)) throw DomainError("parameter outside the path domain");

  const Eigen::MatrixXcd f_inv = guarded_inverse(frame(s));
  // dH(s,t)/dt at t = s with H(s,t) = F(s)^-1 F(t).
  if (s - h >= dom.a && s + h <= dom.b) {
    return f_inv * (frame(s + h) - frame(s - h)) / (2.0 * h);
  }
  if (s + 2 * h <= dom.b) {  // one-sided forward, second order
    return f_inv *
           (-3.0 * frame(s) + 4.0 * frame(s + h) - frame(s + 2 * h)) / (2.0 * h);
  }
  if (s - 2 * h >= dom.a) {  // one-sided backward, second order
    return f_inv *
           (3.0 * frame(s) - 4.0 * frame(s - h) + frame(s - 2 * h)) / (2.0 * h);
  }
  throw DomainError("path domain too short for the finite-difference stencil");
}

ConnectionField reparam_coefficients(const ConnectionField& field,
                                     const Path& gamma, const Reparam& tau) {
  if (!tau.target.same(gamma.domain())) {
    throw DomainError("reparameterization target does not match the path domain");
  }
  ConnectionField out;
  out.fibre_dim = field.fibre_dim;
  Path base = gamma;
  Reparam t = tau;
  ConnectionField inner = field;
  out.gamma_of = [base, t, inner](const Path&, double s) {
    return Eigen::MatrixXcd(t.deriv(s) * inner(base, t.map(s)));
  };
  return out;
}

Eigen::VectorXcd derivation(const ConnectionField& field, const Path& gamma,
                            const std::function<Eigen::VectorXcd(double)>& sigma,
                            double s, double h) {
  if (!sigma) throw DomainError("derivation needs a section");
  if (h < 1e-7) {
    throw NumericalError("finite-difference step below the cancellation guard");
  }
  const Interval dom = gamma.domain();
  if (!(s - h >= dom.a && s + h <= dom.b)) {
    throw DomainError("section not sampled around s: central stencil escapes the domain");
  }
  const Eigen::VectorXcd ds = (sigma(s + h) - sigma(s - h)) / (2.0 * h);
  return ds + field(gamma, s) * sigma(s);
}

TransportFamily connection_transport(const ConnectionField& field,
                                     const IntegratorConfig& cfg) {
  TransportFamily fam;
  fam.fibre_dim = field.fibre_dim;
  fam.resolver = [field, cfg](const Path& gamma, double s, double t) {
    // cfg.steps is the budget for traversing the whole domain; partial spans
    // get a proportional share at the same step density
    IntegratorConfig local = cfg;
    const double len = gamma.domain().length();
    if (len > 0.0) {
      const double frac = std::abs(t - s) / len;
      const int floor_steps = std::min(cfg.steps, 50);
      local.steps = std::clamp(
          static_cast<int>(std::lround(cfg.steps * frac)), floor_steps,
          cfg.steps);
    }
    return integrate_transport(field, gamma, s, t, local).matrix;
  };
  return fam;
}

TransportFamily frame_transport(const FrameFunction& frame) {
  TransportFamily fam;
  fam.fibre_dim = frame.fibre_dim;
  fam.resolver = [frame](const Path& gamma, double s, double t) {
    return transport_from_frame(frame, gamma, s, t).matrix;
  };
  return fam;
}

}  // namespace pathtrans
