#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace disclab {

using cplx = std::complex<double>;

/// A point r*e^{i*theta} strictly inside the unit disc (0 <= r < 1).
struct DiscPoint {
  double r = 0.0;
  double theta = 0.0;

  DiscPoint(double r_, double theta_);  // throws std::domain_error unless 0 <= r < 1
  cplx to_complex() const;
};

/// Truncated power series sum_{n=0}^{N} a_n z^n with dense coefficients.
///
/// The zero series is the empty coefficient vector (degree() == -1).
/// Trailing zero coefficients are kept as stored; degree() reports the
/// truncation degree, not the analytic degree.
class CoeffSeries {
 public:
  CoeffSeries() = default;
  explicit CoeffSeries(std::vector<cplx> coeffs);  // throws std::invalid_argument on non-finite entries

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  /// Coefficient a_n; zero outside the stored range.
  cplx coeff(std::int64_t n) const;
  bool empty() const { return coeffs_.empty(); }

 private:
  std::vector<cplx> coeffs_;
};

/// A gap series sum_k a_k z^{n_k} with n_{k+1} >= ratio * n_k, ratio > 1.
/// The gap condition is validated at construction and never re-checked.
class LacunarySpec {
 public:
  LacunarySpec(std::vector<std::int64_t> indices, std::vector<cplx> coeffs, double ratio);

  const std::vector<std::int64_t>& indices() const { return indices_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  double ratio() const { return ratio_; }
  std::size_t terms() const { return indices_.size(); }
  /// Truncation to the first `count` gap terms (count >= 1).
  LacunarySpec prefix(std::size_t count) const;

 private:
  std::vector<std::int64_t> indices_;
  std::vector<cplx> coeffs_;
  double ratio_ = 0.0;
};

/// Horner evaluation from the highest stored coefficient. The complex
/// overload does not restrict |z|; a truncated series is a polynomial and
/// boundary evaluation is legitimate where callers know what they are doing.
cplx evaluate(const CoeffSeries& f, cplx z);
cplx evaluate(const CoeffSeries& f, const DiscPoint& z);

/// Coefficient shift-down: (f')_n = (n+1) a_{n+1}. Constant -> zero series.
CoeffSeries derivative(const CoeffSeries& f);

/// Full convolution, degree deg(f)+deg(g); direct summation, inner index
/// ascending so results are reproducible bit-for-bit.
CoeffSeries cauchy_product(const CoeffSeries& f, const CoeffSeries& g);

/// Taylor coefficients of the disc automorphism (a-z)/(1-conj(a) z) up to
/// `degree`: c_0 = a, c_n = (|a|^2-1) conj(a)^{n-1}.  Requires |a| < 1.
CoeffSeries mobius_series(cplx a, std::int64_t degree);

/// Taylor coefficients of log(1/(1-z e^{-i theta})): c_n = e^{-i n theta}/n.
CoeffSeries log_kernel_series(double theta, std::int64_t degree);

/// Dense embedding of a gap series, truncated at `degree`.
CoeffSeries lacunary_to_dense(const LacunarySpec& s, std::int64_t degree);

}  // namespace disclab
