#include "disclab/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disclab {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

DiscPoint::DiscPoint(double r_, double theta_) : r(r_), theta(theta_) {
  if (!(r >= 0.0 && r < 1.0) || !std::isfinite(theta)) {
    throw std::domain_error("DiscPoint: need 0 <= r < 1 and finite theta, got r=" + std::to_string(r_));
  }
}

cplx DiscPoint::to_complex() const { return std::polar(r, theta); }

CoeffSeries::CoeffSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n])) {
      throw std::invalid_argument("CoeffSeries: non-finite coefficient at index " + std::to_string(n));
    }
  }
}

cplx CoeffSeries::coeff(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(n)];
}

LacunarySpec::LacunarySpec(std::vector<std::int64_t> indices, std::vector<cplx> coeffs, double ratio)
    : indices_(std::move(indices)), coeffs_(std::move(coeffs)), ratio_(ratio) {
  if (!(ratio_ > 1.0) || !std::isfinite(ratio_)) {
    throw std::invalid_argument("LacunarySpec: gap ratio must be finite and > 1");
  }
  if (indices_.empty() || indices_.size() != coeffs_.size()) {
    throw std::invalid_argument("LacunarySpec: need equally many (and at least one) indices and coefficients");
  }
  if (indices_.front() < 1) {
    throw std::invalid_argument("LacunarySpec: indices must be positive");
  }
  for (std::size_t k = 0; k + 1 < indices_.size(); ++k) {
    // n_{k+1} >= ratio * n_k, checked in exact-ish arithmetic on the doubles
    if (static_cast<double>(indices_[k + 1]) < ratio_ * static_cast<double>(indices_[k])) {
      throw std::invalid_argument("LacunarySpec: gap condition n_{k+1} >= ratio*n_k fails at k=" + std::to_string(k));
    }
  }
  for (cplx c : coeffs_) {
    if (!finite(c)) throw std::invalid_argument("LacunarySpec: non-finite coefficient");
  }
}

LacunarySpec LacunarySpec::prefix(std::size_t count) const {
  if (count < 1 || count > indices_.size()) {
    throw std::invalid_argument("LacunarySpec::prefix: count out of range");
  }
  return LacunarySpec(std::vector<std::int64_t>(indices_.begin(), indices_.begin() + count),
                      std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + count), ratio_);
}

cplx evaluate(const CoeffSeries& f, cplx z) {
  auto c = f.coeffs();
  cplx acc{0.0, 0.0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

cplx evaluate(const CoeffSeries& f, const DiscPoint& z) { return evaluate(f, z.to_complex()); }

CoeffSeries derivative(const CoeffSeries& f) {
  auto c = f.coeffs();
  if (c.size() <= 1) return CoeffSeries{};  // constants (and zero) differentiate to the zero series
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) d[n - 1] = static_cast<double>(n) * c[n];
  return CoeffSeries(std::move(d));
}

CoeffSeries cauchy_product(const CoeffSeries& f, const CoeffSeries& g) {
  auto a = f.coeffs();
  auto b = g.coeffs();
  if (a.empty() || b.empty()) return CoeffSeries{};
  std::vector<cplx> c(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t n = 0; n < c.size(); ++n) {
    // c_n = sum_{i} a_i b_{n-i}, i ascending: fixed summation order
    cplx s{0.0, 0.0};
    std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
    std::size_t hi = std::min(n, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) s += a[i] * b[n - i];
    c[n] = s;
  }
  return CoeffSeries(std::move(c));
}

CoeffSeries mobius_series(cplx a, std::int64_t degree) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("mobius_series: need |a| < 1");
  if (degree < 1) throw std::invalid_argument("mobius_series: need degree >= 1");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  c[0] = a;
  const cplx ab = std::conj(a);
  const double lead = std::norm(a) - 1.0;  // |a|^2 - 1
  cplx pw{1.0, 0.0};                       // conj(a)^{n-1}, iterative so a=0 gives 0^0 = 1
  for (std::int64_t n = 1; n <= degree; ++n) {
    c[static_cast<std::size_t>(n)] = lead * pw;
    pw *= ab;
  }
  return CoeffSeries(std::move(c));
}

CoeffSeries log_kernel_series(double theta, std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("log_kernel_series: need degree >= 1");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx{0.0, 0.0});
  for (std::int64_t n = 1; n <= degree; ++n) {
    c[static_cast<std::size_t>(n)] = std::polar(1.0 / static_cast<double>(n), -theta * static_cast<double>(n));
  }
  return CoeffSeries(std::move(c));
}

CoeffSeries lacunary_to_dense(const LacunarySpec& s, std::int64_t degree) {
  if (degree < 0) throw std::invalid_argument("lacunary_to_dense: need degree >= 0");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < s.terms(); ++k) {
    if (s.indices()[k] <= degree) c[static_cast<std::size_t>(s.indices()[k])] = s.coeffs()[k];
  }
  return CoeffSeries(std::move(c));
}

}  // namespace disclab
