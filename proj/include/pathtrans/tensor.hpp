#pragma once

#include "pathtrans/laws.hpp"
#include "pathtrans/transport.hpp"

namespace pathtrans {

/// Dense (p,q)-tensor over the fibre R^n: p contravariant slots followed by
/// q covariant slots, row-major. Ranks are capped at p + q <= 4.
struct Tensor {
  int p = 0;
  int q = 0;
  int n = 0;
  std::vector<double> entries;

  static Tensor zeros(int p, int q, int n);
  /// (0,0) scalar.
  static Tensor scalar(double value);

  int rank() const { return p + q; }
  size_t size() const { return entries.size(); }
  double& at(const std::vector<int>& idx);
  double at(const std::vector<int>& idx) const;
  double max_abs() const;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(double lambda, const Tensor& t);

/// Outer product: slots of `a` precede slots of `b` within each variance.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Trace over contravariant slot `slot_up` and covariant slot `slot_down`
/// (0-based within their variance groups). Result has rank (p-1, q-1).
Tensor contract(const Tensor& t, int slot_up, int slot_down);

/// Multilinear extension of a fibre transport to (p,q)-tensors: the base
/// matrix acts on every contravariant slot and its inverse-transpose on every
/// covariant slot, which keeps contractions and the scalar pairing intact.
struct STransportMap {
  Eigen::MatrixXd base;
  Eigen::MatrixXd dual;  // inverse transpose of base
  int p = 0;
  int q = 0;
};

/// Build the lift of H to (p,q)-tensors. H must be real to a tolerance (the
/// tensor layer works over a real fibre) and invertible.
STransportMap lift(const Eigen::MatrixXcd& h, int p, int q);
STransportMap lift(const TransportMatrix& h, int p, int q);

Tensor apply_tensor(const STransportMap& s, const Tensor& t);

/// Orientation behavior of tensor transports built from whole-path maps of a
/// base family: point paths act as the identity, orientation-preserving
/// reparameterizations leave the map alone, orientation-reversing ones invert
/// it (likewise the canonical reversal), and the concatenation law composes
/// in the same order as the base maps. Residuals are measured on `samples`
/// deterministic pseudo-random tensors per rank (p,q) with p+q <= max_rank.
LawReport orientation_behavior(const TransportFamily& base, const Path& eta,
                               const Path& eta1, const Path& eta2,
                               const Reparam& tau_preserving,
                               const Reparam& tau_reversing, int max_rank,
                               double tol, int samples = 25,
                               unsigned seed = 0x5eed);

/// Deterministic pseudo-random tensor with entries in [-1, 1].
Tensor random_tensor(int p, int q, int n, unsigned seed);

/// Algebraic laws of a single lifted transport on pseudo-random inputs:
/// linearity in the tensor argument, slot-wise action on tensor products,
/// commutation with contractions, identity on scalars, and preservation of
/// the vector/covector pairing.
LawReport check_tensor_algebra(const Eigen::MatrixXcd& h, int max_rank,
                               double tol, int samples = 50,
                               unsigned seed = 0xa11a);

}  // namespace pathtrans
