#pragma once

#include <map>
#include <span>
#include <vector>

#include "disclab/grids.hpp"
#include "disclab/series.hpp"

namespace disclab {

/// Finitely supported Laurent series on the circle, frequency -> coefficient.
/// Zero coefficients are never stored, so support queries are structural and
/// coefficient stabilization statements are exact, not approximate.
class SparseLaurent {
 public:
  SparseLaurent() = default;
  static SparseLaurent monomial(cplx c, std::int64_t n);

  /// *this += scale * z^shift * other.  Entries that cancel to exactly zero
  /// are dropped.
  void add_scaled_shift(const SparseLaurent& other, cplx scale, std::int64_t shift);

  cplx coeff(std::int64_t n) const;
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t min_freq() const;  // 0 when empty
  std::int64_t max_freq() const;
  const std::map<std::int64_t, cplx>& terms() const { return terms_; }

  /// sum_n c_n e^{i n theta_j} at every angle of a grid.  The phase n*j mod M
  /// is reduced in integer arithmetic, so huge frequencies lose no accuracy.
  std::vector<cplx> evaluate_on_grid(const CircleGrid& grid) const;

 private:
  std::map<std::int64_t, cplx> terms_;
};

/// Inputs for the paired recursion: coefficients u_k (square-summable in the
/// intended regime) on frequencies n_k with the doubling-plus gap
/// n_{k+1} > 2 n_k, which keeps the per-step supports disjoint.
struct FournierInput {
  std::vector<cplx> u;
  std::vector<std::int64_t> n;

  FournierInput(std::vector<cplx> u_, std::vector<std::int64_t> n_);  // validates gaps
  std::size_t steps() const { return u.size(); }
  double u_l2() const;
};

struct BlockBound {
  int k = 0;               // the block [n_k+1, n_{k+1}]
  double sup_estimate = 0;  // circle-grid max of the block's modulus
  double bound = 0;         // |u_{k+1}| * prod_{j<=k} (1+|u_j|^2)^{1/2}
};

/// What the construction proves about its own output, numerically.
struct FournierCertificate {
  double max_coeff_error = 0.0;   // max_k |phi_hat(n_k) - u_k| (structurally 0)
  double identity_residual = 0.0; // max over samples of ||phi|^2+|h|^2 - prod(1+|u_j|^2)|
  std::vector<BlockBound> blocks;
  bool lambda_support_ok = false; // supp(phi) inside the disjoint union of the Lambda_k
  int samples = 0;
};

/// One step of the paired recursion:
///   phi_k = phi_{k-1} + u_k z^{n_k} h_{k-1}
///   h_k   = h_{k-1} - conj(u_k) z^{-n_k} phi_{k-1}
/// Validates that phi has no negative and h no positive frequencies.
std::pair<SparseLaurent, SparseLaurent> fournier_step(const SparseLaurent& phi, const SparseLaurent& h,
                                                      cplx u_k, std::int64_t n_k);

struct FournierResult {
  SparseLaurent phi;
  SparseLaurent h;
  FournierCertificate cert;
  /// Dense dump of phi (degree n_K), only when n_K <= dense_limit; otherwise
  /// an empty series.
  CoeffSeries psi;
};

/// Runs the recursion from (u_0 z^{n_0}, 1) through all steps, then builds
/// the certificate on `cert_samples` circle angles.
FournierResult fournier_construct(const FournierInput& input, int cert_samples = 4096,
                                  std::int64_t dense_limit = std::int64_t{1} << 20);

/// Max residual of |phi|^2 + |h|^2 = prod_j (1 + |u_j|^2) over the grid.
/// Deliberately sensitive: corrupting any stored coefficient by 1e-3 moves
/// the residual far above the clean-roundoff scale.
double verify_identity(const SparseLaurent& phi, const SparseLaurent& h, std::span<const cplx> u_prefix,
                       const CircleGrid& samples);

/// Frequency-window restriction: coefficients with index in [lo, hi) kept,
/// everything else zeroed; result truncated at hi-1 (or deg f if smaller).
CoeffSeries block_partial_sum(const CoeffSeries& f, std::int64_t lo, std::int64_t hi);

}  // namespace disclab
