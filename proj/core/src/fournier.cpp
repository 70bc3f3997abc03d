#include "disclab/fournier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace disclab {

SparseLaurent SparseLaurent::monomial(cplx c, std::int64_t n) {
  SparseLaurent s;
  if (c != cplx{0.0, 0.0}) s.terms_.emplace(n, c);
  return s;
}

void SparseLaurent::add_scaled_shift(const SparseLaurent& other, cplx scale, std::int64_t shift) {
  if (scale == cplx{0.0, 0.0}) return;
  for (const auto& [freq, c] : other.terms_) {
    const std::int64_t target = freq + shift;
    auto it = terms_.find(target);
    if (it == terms_.end()) {
      terms_.emplace(target, scale * c);
    } else {
      it->second += scale * c;
      if (it->second == cplx{0.0, 0.0}) terms_.erase(it);
    }
  }
}

cplx SparseLaurent::coeff(std::int64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? cplx{0.0, 0.0} : it->second;
}

std::int64_t SparseLaurent::min_freq() const { return terms_.empty() ? 0 : terms_.begin()->first; }
std::int64_t SparseLaurent::max_freq() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::vector<cplx> SparseLaurent::evaluate_on_grid(const CircleGrid& grid) const {
  const std::int64_t m = grid.points();
  std::vector<cplx> tw(static_cast<std::size_t>(m));
  for (std::int64_t j = 0; j < m; ++j) {
    tw[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  }
  std::vector<cplx> out(static_cast<std::size_t>(m), cplx{0.0, 0.0});
  for (const auto& [freq, c] : terms_) {
    const std::int64_t base = ((freq % m) + m) % m;  // e^{i n theta_j} = tw[(n j) mod m]
    std::int64_t idx = 0;
    for (std::int64_t j = 0; j < m; ++j) {
      out[static_cast<std::size_t>(j)] += c * tw[static_cast<std::size_t>(idx)];
      idx += base;
      if (idx >= m) idx -= m;
    }
  }
  return out;
}

FournierInput::FournierInput(std::vector<cplx> u_, std::vector<std::int64_t> n_)
    : u(std::move(u_)), n(std::move(n_)) {
  if (u.empty() || u.size() != n.size()) {
    throw std::invalid_argument("FournierInput: need equally many (and at least one) u and n entries");
  }
  if (n.front() < 1) throw std::invalid_argument("FournierInput: frequencies must be positive");
  for (std::size_t k = 0; k + 1 < n.size(); ++k) {
    if (n[k + 1] <= 2 * n[k]) {
      throw std::invalid_argument("FournierInput: need n_{k+1} > 2 n_k (fails at k=" + std::to_string(k) + ")");
    }
  }
  for (cplx c : u) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("FournierInput: non-finite u entry");
    }
  }
}

double FournierInput::u_l2() const {
  double acc = 0.0;
  for (cplx c : u) acc += std::norm(c);
  return std::sqrt(acc);
}

std::pair<SparseLaurent, SparseLaurent> fournier_step(const SparseLaurent& phi, const SparseLaurent& h,
                                                      cplx u_k, std::int64_t n_k) {
  if (n_k < 1) throw std::invalid_argument("fournier_step: need n_k >= 1");
  if (!phi.empty() && phi.min_freq() < 0) throw std::invalid_argument("fournier_step: phi has negative frequencies");
  if (!h.empty() && h.max_freq() > 0) throw std::invalid_argument("fournier_step: h has positive frequencies");
  SparseLaurent phi_next = phi;
  phi_next.add_scaled_shift(h, u_k, n_k);
  SparseLaurent h_next = h;
  h_next.add_scaled_shift(phi, -std::conj(u_k), -n_k);  // uses the *old* phi
  return {std::move(phi_next), std::move(h_next)};
}

namespace {

// Lambda blocks: Lambda_0 = {n_0}, Lambda_k = [n_k - n_{k-1}, n_k]; the gap
// condition makes them pairwise disjoint, and the construction keeps supp(phi)
// inside their union.
bool in_lambda_union(std::int64_t freq, const std::vector<std::int64_t>& n) {
  if (freq == n[0]) return true;
  for (std::size_t k = 1; k < n.size(); ++k) {
    if (freq >= n[k] - n[k - 1] && freq <= n[k]) return true;
  }
  return false;
}

}  // namespace

double verify_identity(const SparseLaurent& phi, const SparseLaurent& h, std::span<const cplx> u_prefix,
                       const CircleGrid& samples) {
  double target = 1.0;
  for (cplx c : u_prefix) target *= 1.0 + std::norm(c);
  const auto pv = phi.evaluate_on_grid(samples);
  const auto hv = h.evaluate_on_grid(samples);
  double worst = 0.0;
  for (std::size_t j = 0; j < pv.size(); ++j) {
    worst = std::max(worst, std::abs(std::norm(pv[j]) + std::norm(hv[j]) - target));
  }
  return worst;
}

FournierResult fournier_construct(const FournierInput& input, int cert_samples, std::int64_t dense_limit) {
  if (cert_samples < 16) throw std::invalid_argument("fournier_construct: need at least 16 certificate samples");
  FournierResult res;
  res.phi = SparseLaurent::monomial(input.u[0], input.n[0]);
  res.h = SparseLaurent::monomial(cplx{1.0, 0.0}, 0);
  for (std::size_t k = 1; k < input.steps(); ++k) {
    auto [phi_next, h_next] = fournier_step(res.phi, res.h, input.u[k], input.n[k]);
    res.phi = std::move(phi_next);
    res.h = std::move(h_next);
  }

  FournierCertificate& cert = res.cert;
  cert.samples = cert_samples;
  for (std::size_t k = 0; k < input.steps(); ++k) {
    cert.max_coeff_error = std::max(cert.max_coeff_error, std::abs(res.phi.coeff(input.n[k]) - input.u[k]));
  }
  const CircleGrid grid(cert_samples);
  cert.identity_residual = verify_identity(res.phi, res.h, input.u, grid);

  cert.lambda_support_ok = true;
  for (const auto& [freq, c] : res.phi.terms()) {
    if (!in_lambda_union(freq, input.n)) {
      cert.lambda_support_ok = false;
      break;
    }
  }

  // per-block sup estimates against |u_{k+1}| prod_{j<=k} (1+|u_j|^2)^{1/2};
  // the frequency window [n_k+1, n_{k+1}] of phi is exactly u_{k+1} z^{n_{k+1}} h_k
  double running = 1.0 + std::norm(input.u[0]);
  for (std::size_t k = 0; k + 1 < input.steps(); ++k) {
    SparseLaurent block;
    for (const auto& [freq, c] : res.phi.terms()) {
      if (freq > input.n[k] && freq <= input.n[k + 1]) block.add_scaled_shift(SparseLaurent::monomial(c, freq), 1.0, 0);
    }
    const auto bv = block.evaluate_on_grid(grid);
    double sup = 0.0;
    for (const cplx& v : bv) sup = std::max(sup, std::abs(v));
    BlockBound bb;
    bb.k = static_cast<int>(k);
    bb.sup_estimate = sup;
    bb.bound = std::abs(input.u[k + 1]) * std::sqrt(running);
    cert.blocks.push_back(bb);
    running *= 1.0 + std::norm(input.u[k + 1]);
  }

  const std::int64_t top = input.n.back();
  if (top <= dense_limit) {
    std::vector<cplx> dense(static_cast<std::size_t>(top) + 1, cplx{0.0, 0.0});
    for (const auto& [freq, c] : res.phi.terms()) {
      if (freq >= 0 && freq <= top) dense[static_cast<std::size_t>(freq)] = c;
    }
    res.psi = CoeffSeries(std::move(dense));
  }
  return res;
}

CoeffSeries block_partial_sum(const CoeffSeries& f, std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("block_partial_sum: need 0 <= lo <= hi");
  const std::int64_t top = std::min(f.degree(), hi - 1);
  if (top < 0) return CoeffSeries{};
  std::vector<cplx> out(static_cast<std::size_t>(top) + 1, cplx{0.0, 0.0});
  for (std::int64_t n = lo; n <= top; ++n) out[static_cast<std::size_t>(n)] = f.coeff(n);
  return CoeffSeries(std::move(out));
}

}  // namespace disclab
