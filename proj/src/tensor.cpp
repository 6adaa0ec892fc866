#include "pathtrans/tensor.hpp"

#include <cmath>
#include <random>

#include "pathtrans/errors.hpp"
#include "pathtrans/parallel.hpp"

namespace pathtrans {

namespace {

constexpr int kMaxRank = 4;

size_t entry_count(int p, int q, int n) {
  size_t c = 1;
  for (int i = 0; i < p + q; ++i) c *= static_cast<size_t>(n);
  return c;
}

void check_shape(int p, int q, int n) {
  if (p < 0 || q < 0 || n < 1) throw DomainError("invalid tensor shape");
  if (p + q > kMaxRank) {
    throw DomainError("tensor rank capped at p + q <= " + std::to_string(kMaxRank));
  }
}

size_t flatten(const std::vector<int>& idx, int n) {
  size_t f = 0;
  for (int i : idx) f = f * static_cast<size_t>(n) + static_cast<size_t>(i);
  return f;
}

}  // namespace

Tensor Tensor::zeros(int p, int q, int n) {
  check_shape(p, q, n);
  Tensor t;
  t.p = p;
  t.q = q;
  t.n = n;
  t.entries.assign(entry_count(p, q, n), 0.0);
  return t;
}

Tensor Tensor::scalar(double value) {
  Tensor t = zeros(0, 0, 1);
  t.entries[0] = value;
  return t;
}

double& Tensor::at(const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != rank()) {
    throw DomainError("tensor index rank mismatch");
  }
  return entries[flatten(idx, n)];
}

double Tensor::at(const std::vector<int>& idx) const {
  return const_cast<Tensor*>(this)->at(idx);
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (double e : entries) m = std::max(m, std::abs(e));
  return m;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.p != b.p || a.q != b.q || a.n != b.n) {
    throw DomainError("tensor shape mismatch");
  }
  Tensor r = a;
  for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  return a + (-1.0 * b);
}

Tensor operator*(double lambda, const Tensor& t) {
  Tensor r = t;
  for (double& e : r.entries) e *= lambda;
  return r;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.rank() > 0 && b.rank() > 0 && a.n != b.n) {
    throw DomainError("tensor product factors over different fibres");
  }
  const int n = a.rank() > 0 ? a.n : b.n;
  Tensor r = Tensor::zeros(a.p + b.p, a.q + b.q, n);

  std::vector<int> ia(a.rank()), ib(b.rank()), ir(r.rank());
  // iterate over all index tuples of the result
  const size_t total = r.entries.size();
  for (size_t f = 0; f < total; ++f) {
    size_t rem = f;
    for (int k = r.rank() - 1; k >= 0; --k) {
      ir[k] = static_cast<int>(rem % n);
      rem /= n;
    }
    // result slots: [a-contra][b-contra][a-co][b-co]
    int pos = 0;
    for (int k = 0; k < a.p; ++k) ia[k] = ir[pos++];
    for (int k = 0; k < b.p; ++k) ib[k] = ir[pos++];
    for (int k = 0; k < a.q; ++k) ia[a.p + k] = ir[pos++];
    for (int k = 0; k < b.q; ++k) ib[b.p + k] = ir[pos++];
    r.entries[f] =
        a.entries[a.rank() ? flatten(ia, n) : 0] *
        b.entries[b.rank() ? flatten(ib, n) : 0];
  }
  return r;
}

Tensor contract(const Tensor& t, int slot_up, int slot_down) {
  if (slot_up < 0 || slot_up >= t.p || slot_down < 0 || slot_down >= t.q) {
    throw DomainError("contraction slots out of range");
  }
  Tensor r = Tensor::zeros(t.p - 1, t.q - 1, t.n);
  const int up = slot_up;              // absolute position
  const int down = t.p + slot_down;    // absolute position

  std::vector<int> it(t.rank());
  const size_t total = r.entries.size();
  std::vector<int> ir(r.rank());
  for (size_t f = 0; f < total; ++f) {
    size_t rem = f;
    for (int k = r.rank() - 1; k >= 0; --k) {
      ir[k] = static_cast<int>(rem % t.n);
      rem /= t.n;
    }
    // scatter result indices into the full tuple, skipping the traced slots
    int pos = 0;
    for (int k = 0; k < t.rank(); ++k) {
      if (k == up || k == down) continue;
      it[k] = ir[pos++];
    }
    double sum = 0.0;
    for (int d = 0; d < t.n; ++d) {
      it[up] = d;
      it[down] = d;
      sum += t.entries[flatten(it, t.n)];
    }
    r.entries[f] = sum;
  }
  return r;
}

STransportMap lift(const Eigen::MatrixXcd& h, int p, int q) {
  check_shape(p, q, static_cast<int>(h.rows()));
  if (h.imag().norm() > 1e-12 * (1.0 + h.real().norm())) {
    throw DomainError("tensor lifts act on real fibre transports");
  }
  STransportMap s;
  s.base = h.real();
  s.dual = guarded_inverse(h).real().transpose();
  s.p = p;
  s.q = q;
  return s;
}

STransportMap lift(const TransportMatrix& h, int p, int q) {
  return lift(h.matrix, p, q);
}

Tensor apply_tensor(const STransportMap& s, const Tensor& t) {
  if (t.p != s.p || t.q != s.q) {
    throw DomainError("tensor rank does not match the lifted transport");
  }
  if (t.rank() == 0) return t;  // scalars are fixed
  if (t.n != s.base.rows()) {
    throw DomainError("tensor fibre dimension does not match the transport");
  }

  // contract one slot at a time
  Tensor cur = t;
  const int n = t.n;
  std::vector<int> idx(t.rank());
  for (int slot = 0; slot < t.rank(); ++slot) {
    const Eigen::MatrixXd& m = slot < t.p ? s.base : s.dual;
    Tensor next = Tensor::zeros(t.p, t.q, n);
    const size_t total = next.entries.size();
    for (size_t f = 0; f < total; ++f) {
      size_t rem = f;
      for (int k = t.rank() - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(rem % n);
        rem /= n;
      }
      const int out_i = idx[slot];
      double sum = 0.0;
      for (int d = 0; d < n; ++d) {
        idx[slot] = d;
        sum += m(out_i, d) * cur.entries[flatten(idx, n)];
      }
      next.entries[f] = sum;
    }
    cur = std::move(next);
  }
  return cur;
}

Tensor random_tensor(int p, int q, int n, unsigned seed) {
  Tensor t = Tensor::zeros(p, q, n);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& e : t.entries) e = dist(rng);
  return t;
}

namespace {

double map_distance_on_samples(const STransportMap& a, const STransportMap& b,
                               int p, int q, int n, int samples, unsigned seed) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Tensor t = random_tensor(p, q, n, seed + 977u * static_cast<unsigned>(k));
    worst = std::max(worst, (apply_tensor(a, t) - apply_tensor(b, t)).max_abs());
  }
  return worst;
}

double roundtrip_distance_on_samples(const STransportMap& a,
                                     const STransportMap& b, int p, int q,
                                     int n, int samples, unsigned seed) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Tensor t = random_tensor(p, q, n, seed + 1409u * static_cast<unsigned>(k));
    worst = std::max(worst, (apply_tensor(a, apply_tensor(b, t)) - t).max_abs());
  }
  return worst;
}

}  // namespace

LawReport check_tensor_algebra(const Eigen::MatrixXcd& h, int max_rank,
                               double tol, int samples, unsigned seed) {
  LawReport report;
  report.suite = "tensor-algebra";
  report.tol = tol;
  const int n = static_cast<int>(h.rows());

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto rand_vec = [&](int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = dist(rng);
    return v;
  };
  auto as_tensor = [&](const Eigen::VectorXd& v, int p, int q) {
    Tensor t = Tensor::zeros(p, q, n);
    for (int i = 0; i < n; ++i) t.entries[static_cast<size_t>(i)] = v[i];
    return t;
  };

  for (int p = 0; p <= max_rank; ++p) {
    for (int q = 0; p + q <= max_rank; ++q) {
      const std::string label =
          "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const STransportMap s = lift(h, p, q);

      double worst = 0.0;
      for (int k = 0; k < samples; ++k) {
        const unsigned sk = seed + static_cast<unsigned>(1000 * p + 100 * q + k);
        const Tensor t1 = random_tensor(p, q, n, sk);
        const Tensor t2 = random_tensor(p, q, n, sk + 31u);
        const double l1 = dist(rng), l2 = dist(rng);
        const Tensor lhs = apply_tensor(s, l1 * t1 + l2 * t2);
        const Tensor rhs = l1 * apply_tensor(s, t1) + l2 * apply_tensor(s, t2);
        worst = std::max(worst, (lhs - rhs).max_abs());
      }
      report.add(make_check("tensor-linearity", label, {}, worst, tol));
    }
  }

  // slot-wise action on products of rank-1 factors, all variance mixes
  double worst_split = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Eigen::VectorXd v = rand_vec(n), w = rand_vec(n);
    for (auto [pa, qa, pb, qb] :
         {std::array<int, 4>{1, 0, 1, 0}, std::array<int, 4>{1, 0, 0, 1},
          std::array<int, 4>{0, 1, 0, 1}}) {
      const Tensor a = as_tensor(v, pa, qa);
      const Tensor b = as_tensor(w, pb, qb);
      const Tensor lhs =
          apply_tensor(lift(h, pa + pb, qa + qb), tensor_product(a, b));
      const Tensor rhs = tensor_product(apply_tensor(lift(h, pa, qa), a),
                                        apply_tensor(lift(h, pb, qb), b));
      worst_split = std::max(worst_split, (lhs - rhs).max_abs());
    }
  }
  report.add(make_check("tensor-product-split", "rank-1 factors", {},
                        worst_split, tol));

  double worst_contract = 0.0;
  for (int p = 1; p <= max_rank; ++p) {
    for (int q = 1; p + q <= max_rank; ++q) {
      const STransportMap s_full = lift(h, p, q);
      const STransportMap s_less = lift(h, p - 1, q - 1);
      for (int k = 0; k < samples; ++k) {
        const Tensor t = random_tensor(
            p, q, n, seed + static_cast<unsigned>(5000 + 100 * p + 10 * q + k));
        const Tensor lhs = contract(apply_tensor(s_full, t), 0, 0);
        const Tensor rhs = apply_tensor(s_less, contract(t, 0, 0));
        worst_contract = std::max(worst_contract, (lhs - rhs).max_abs());
      }
    }
  }
  report.add(make_check("contraction-commute", "slot (0,0)", {}, worst_contract,
                        tol));

  double worst_scalar = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double lambda = dist(rng);
    const Tensor t = apply_tensor(lift(h, 0, 0), Tensor::scalar(lambda));
    worst_scalar = std::max(worst_scalar, std::abs(t.entries[0] - lambda));
  }
  report.add(make_check("scalar-identity", "scalars", {}, worst_scalar, tol));

  double worst_pairing = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Eigen::VectorXd v = rand_vec(n), w = rand_vec(n);
    const Tensor sv = apply_tensor(lift(h, 1, 0), as_tensor(v, 1, 0));
    const Tensor sw = apply_tensor(lift(h, 0, 1), as_tensor(w, 0, 1));
    const double before = v.dot(w);
    const double after = contract(
        tensor_product(sv, sw), 0, 0).entries[0];
    worst_pairing = std::max(worst_pairing, std::abs(after - before));
  }
  report.add(make_check("pairing-preservation", "vector/covector", {},
                        worst_pairing, tol));

  return report;
}

LawReport orientation_behavior(const TransportFamily& base, const Path& eta,
                               const Path& eta1, const Path& eta2,
                               const Reparam& tau_preserving,
                               const Reparam& tau_reversing, int max_rank,
                               double tol, int samples, unsigned seed) {
  LawReport report;
  report.suite = "tensor-orientation";
  report.tol = tol;

  const int n = base.fibre_dim;
  auto whole = [&](const Path& path) {
    return from_transport(base, path).map;
  };

  const Eigen::MatrixXcd h = whole(eta);
  const Eigen::MatrixXcd h_pres = whole(reparameterize(eta, tau_preserving));
  const Eigen::MatrixXcd h_rev_tau = whole(reparameterize(eta, tau_reversing));
  const Eigen::MatrixXcd h_rev = whole(reverse_canonical(eta));
  const Eigen::MatrixXcd h_point = whole(point_path(eta.start(), eta.domain().a));
  const Path product = concat_canonical(eta1, eta2);
  const Eigen::MatrixXcd h12 = whole(product);
  const Eigen::MatrixXcd h1 = whole(eta1);
  const Eigen::MatrixXcd h2 = whole(eta2);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  for (int p = 0; p <= max_rank; ++p) {
    for (int q = 0; p + q <= max_rank; ++q) {
      const std::string label = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const unsigned s0 = seed + static_cast<unsigned>(131 * p + 17 * q);

      report.add(make_check(
          "tensor-point", label, {},
          map_distance_on_samples(lift(h_point, p, q), lift(id, p, q), p, q, n,
                                  samples, s0),
          tol));
      report.add(make_check(
          "tensor-orient-preserve", label, {},
          map_distance_on_samples(lift(h_pres, p, q), lift(h, p, q), p, q, n,
                                  samples, s0 + 1),
          tol));
      report.add(make_check(
          "tensor-orient-reverse", label, {},
          roundtrip_distance_on_samples(lift(h_rev_tau, p, q), lift(h, p, q), p,
                                        q, n, samples, s0 + 2),
          tol));
      report.add(make_check(
          "tensor-reverse", label, {},
          roundtrip_distance_on_samples(lift(h_rev, p, q), lift(h, p, q), p, q,
                                        n, samples, s0 + 3),
          tol));

      // product law in the same order as the base maps compose
      double worst = 0.0;
      for (int k = 0; k < samples; ++k) {
        const Tensor t = random_tensor(p, q, n, s0 + 7919u * static_cast<unsigned>(k));
        const Tensor lhs = apply_tensor(lift(h12, p, q), t);
        const Tensor rhs =
            apply_tensor(lift(h2, p, q), apply_tensor(lift(h1, p, q), t));
        worst = std::max(worst, (lhs - rhs).max_abs());
      }
      report.add(make_check("tensor-product", label, {}, worst, tol));
    }
  }
  return report;
}

}  // namespace pathtrans
