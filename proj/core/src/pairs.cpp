#include "zpd/pairs.hpp"

namespace zpd {

Vec PolyVec::eval(const Scalar& lambda) const {
  if (coeff.empty()) fail(errc::input, "empty polynomial vector");
  // Horner on vectors
  Vec acc = coeff.back();
  for (std::size_t k = coeff.size() - 1; k-- > 0;)
    acc = add(scale(lambda, acc), coeff[k]);
  return acc;
}

Subspace centralizer(const LieAlgebra& L, const Vec& x) {
  return kernel_basis(L.ad_matrix(x));
}

std::vector<Scalar> lambda_points(const Field& f, std::size_t count) {
  std::vector<Scalar> out;
  if (f.is_prime() && count > f.p) count = f.p;
  if (f.is_rational()) {
    long long v = 0;
    out.push_back(Scalar::from_int(f, 0));
    while (out.size() < count) {
      ++v;
      out.push_back(Scalar::from_int(f, v));
      if (out.size() < count) out.push_back(Scalar::from_int(f, -v));
    }
  } else {
    for (std::size_t r = 0; r < count; ++r)
      out.push_back(Scalar::from_int(f, static_cast<long long>(r)));
  }
  return out;
}

void certify_family(const PairFamily& fam, const Field& f,
                    const std::function<Vec(const Vec&, const Vec&)>& product) {
  const std::size_t needed = 2 * fam.degree_bound() + 1;
  for (const Scalar& lam : lambda_points(f, needed)) {
    Vec r = product(fam.x.eval(lam), fam.y.eval(lam));
    if (!is_zero_vec(r))
      fail(errc::family_invalid,
           "family \"" + fam.name + "\" fails its identity at lambda = " + lam.str());
  }
}

// --------------------------------------------------------------------------
// PairGenerator
// --------------------------------------------------------------------------

PairGenerator::PairGenerator(const LieAlgebra& L, const SamplerConfig& cfg,
                             std::vector<PairFamily> families)
    : L_(&L), cfg_(cfg), families_(std::move(families)),
      rng_(cfg.seed), fresh_rng_(cfg.seed ^ 0x5eedf00dULL) {
  if (!cfg_.use_families) families_.clear();
  for (const auto& fam : families_)
    certify_family(fam, L.field(),
                   [&](const Vec& a, const Vec& b) { return L.bracket(a, b); });
  // λ-grid, extended to 2D+1 points for family evaluation
  std::size_t points = 2 * static_cast<std::size_t>(cfg_.lambda_radius) + 1;
  for (const auto& fam : families_)
    points = std::max(points, 2 * fam.degree_bound() + 1);
  grid_ = lambda_points(L.field(), points);
  if (cfg_.use_basis) stages_.push_back(0);
  if (!families_.empty()) stages_.push_back(1);
  if (cfg_.use_line_sweep) stages_.push_back(2);
}

void PairGenerator::emit_verified(Vec x, Vec y, bool from_family,
                                  std::vector<CommutingPair>& out) {
  Vec r = L_->bracket(x, y);
  if (!is_zero_vec(r)) {
    if (from_family)
      fail(errc::family_invalid, "family evaluation produced a non-commuting pair");
    fail(errc::input, "internal: generated pair fails [x,y] = 0");
  }
  ++emitted_;
  out.push_back(CommutingPair{std::move(x), std::move(y)});
}

void PairGenerator::emit_centralizer(const Vec& x, std::vector<CommutingPair>& out) {
  if (is_zero_vec(x)) return;
  Subspace c = centralizer(*L_, x);
  for (const auto& row : c.basis()) emit_verified(x, row, false, out);
}

Vec PairGenerator::random_vector(Rng& rng) {
  const Field& f = L_->field();
  const std::size_t n = L_->dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec v = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = f.is_rational() ? Scalar::from_int(f, rng.boxed(cfg_.coeff_box))
                             : Scalar::from_int(f, static_cast<long long>(rng.below(f.p)));
    if (!is_zero_vec(v)) return v;
  }
  return unit_vec(f, n, 0);
}

Scalar PairGenerator::random_lambda(Rng& rng) {
  const Field& f = L_->field();
  if (f.is_prime()) return Scalar::from_int(f, static_cast<long long>(rng.below(f.p)));
  long long num = 1 + static_cast<long long>(rng.below(50));
  long long den = 1 + static_cast<long long>(rng.below(8));
  if (rng.below(2)) num = -num;
  return Scalar::rational(num, den);
}

bool PairGenerator::next_round(std::vector<CommutingPair>& out) {
  if (round_ >= cfg_.rounds) return false;
  const Field& f = L_->field();
  const std::size_t n = L_->dim();
  if (round_ < stages_.size()) {
    switch (stages_[round_]) {
      case 0:  // basis centralizers
        for (std::size_t i = 0; i < n; ++i) emit_centralizer(unit_vec(f, n, i), out);
        break;
      case 1:  // families on the grid
        for (const auto& fam : families_)
          for (const auto& lam : grid_)
            emit_verified(fam.x.eval(lam), fam.y.eval(lam), true, out);
        break;
      case 2:  // line sweeps x = e_i + λ e_j over ordered pairs
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const auto& lam : grid_) {
              if (lam.is_zero()) continue;  // duplicate of the basis stage
              Vec x = unit_vec(f, n, i);
              x[j] = lam;
              emit_centralizer(x, out);
            }
          }
        break;
    }
    ++round_;
    return true;
  }
  if (!cfg_.use_random) { round_ = cfg_.rounds; return false; }
  const std::size_t batch = n < 4 ? 4 : n;
  for (std::size_t b = 0; b < batch; ++b) emit_centralizer(random_vector(rng_), out);
  ++round_;
  return true;
}

std::vector<CommutingPair> PairGenerator::fresh_pairs(std::size_t count) {
  std::vector<CommutingPair> out;
  const Field& f = L_->field();
  const std::size_t n = L_->dim();
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 64 * count + 64) {
    switch (fresh_cursor_++ % 3) {
      case 0: {
        if (families_.empty()) break;
        const auto& fam = families_[(fresh_cursor_ / 3) % families_.size()];
        Scalar lam = random_lambda(fresh_rng_);
        Scalar sx = Scalar::zero(f), sy = Scalar::zero(f);
        while (sx.is_zero()) sx = random_lambda(fresh_rng_);
        while (sy.is_zero()) sy = random_lambda(fresh_rng_);
        emit_verified(scale(sx, fam.x.eval(lam)), scale(sy, fam.y.eval(lam)), true, out);
        break;
      }
      case 1: {
        std::size_t i = fresh_rng_.below(n);
        std::size_t j = fresh_rng_.below(n);
        if (i == j) break;
        Vec x = unit_vec(f, n, i);
        x[j] = random_lambda(fresh_rng_);
        emit_centralizer(x, out);
        break;
      }
      case 2:
        emit_centralizer(random_vector(fresh_rng_), out);
        break;
    }
  }
  if (out.size() > count) out.resize(count);
  return out;
}

// --------------------------------------------------------------------------
// ModulePairGenerator
// --------------------------------------------------------------------------

ModulePairGenerator::ModulePairGenerator(const LieModule& m, const SamplerConfig& cfg,
                                         std::vector<PairFamily> families)
    : m_(&m), cfg_(cfg), families_(std::move(families)),
      rng_(cfg.seed), fresh_rng_(cfg.seed ^ 0x5eedf00dULL) {
  if (!cfg_.use_families) families_.clear();
  for (const auto& fam : families_)
    certify_family(fam, m.field(),
                   [&](const Vec& x, const Vec& v) { return m.act(x, v); });
  std::size_t points = 2 * static_cast<std::size_t>(cfg_.lambda_radius) + 1;
  for (const auto& fam : families_)
    points = std::max(points, 2 * fam.degree_bound() + 1);
  grid_ = lambda_points(m.field(), points);
  if (cfg_.use_basis) { stages_.push_back(0); stages_.push_back(1); }
  if (!families_.empty()) stages_.push_back(2);
  if (cfg_.use_line_sweep) stages_.push_back(3);
}

void ModulePairGenerator::emit_verified(Vec x, Vec v, bool from_family,
                                        std::vector<CommutingPair>& out) {
  Vec r = m_->act(x, v);
  if (!is_zero_vec(r)) {
    if (from_family)
      fail(errc::family_invalid, "module family evaluation produced xv != 0");
    fail(errc::input, "internal: generated module pair fails xv = 0");
  }
  ++emitted_;
  out.push_back(CommutingPair{std::move(x), std::move(v)});
}

void ModulePairGenerator::emit_x_kernel(const Vec& x, std::vector<CommutingPair>& out) {
  if (is_zero_vec(x)) return;
  Subspace ker = kernel_basis(m_->rho_of(x));
  for (const auto& v : ker.basis()) emit_verified(x, v, false, out);
}

void ModulePairGenerator::emit_v_kernel(const Vec& v, std::vector<CommutingPair>& out) {
  if (is_zero_vec(v)) return;
  Subspace ker = kernel_basis(m_->action_on_vector_matrix(v));
  for (const auto& x : ker.basis()) emit_verified(x, v, false, out);
}

Vec ModulePairGenerator::random_vector(Rng& rng, std::size_t len) {
  const Field& f = m_->field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec v = zero_vec(f, len);
    for (std::size_t i = 0; i < len; ++i)
      v[i] = f.is_rational() ? Scalar::from_int(f, rng.boxed(cfg_.coeff_box))
                             : Scalar::from_int(f, static_cast<long long>(rng.below(f.p)));
    if (!is_zero_vec(v)) return v;
  }
  return unit_vec(f, len, 0);
}

Scalar ModulePairGenerator::random_lambda(Rng& rng) {
  const Field& f = m_->field();
  if (f.is_prime()) return Scalar::from_int(f, static_cast<long long>(rng.below(f.p)));
  long long num = 1 + static_cast<long long>(rng.below(50));
  long long den = 1 + static_cast<long long>(rng.below(8));
  if (rng.below(2)) num = -num;
  return Scalar::rational(num, den);
}

bool ModulePairGenerator::next_round(std::vector<CommutingPair>& out) {
  if (round_ >= cfg_.rounds) return false;
  const Field& f = m_->field();
  const std::size_t n = m_->algebra().dim(), d = m_->mod_dim();
  if (round_ < stages_.size()) {
    switch (stages_[round_]) {
      case 0:
        for (std::size_t i = 0; i < n; ++i) emit_x_kernel(unit_vec(f, n, i), out);
        break;
      case 1:
        for (std::size_t j = 0; j < d; ++j) emit_v_kernel(unit_vec(f, d, j), out);
        break;
      case 2:
        for (const auto& fam : families_)
          for (const auto& lam : grid_)
            emit_verified(fam.x.eval(lam), fam.y.eval(lam), true, out);
        break;
      case 3:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const auto& lam : grid_) {
              if (lam.is_zero()) continue;
              Vec x = unit_vec(f, n, i);
              x[j] = lam;
              emit_x_kernel(x, out);
            }
          }
        break;
    }
    ++round_;
    return true;
  }
  if (!cfg_.use_random) { round_ = cfg_.rounds; return false; }
  const std::size_t batch = n + d < 4 ? 4 : n + d;
  for (std::size_t b = 0; b < batch; ++b) {
    if (b % 2 == 0) emit_x_kernel(random_vector(rng_, n), out);
    else emit_v_kernel(random_vector(rng_, d), out);
  }
  ++round_;
  return true;
}

std::vector<CommutingPair> ModulePairGenerator::fresh_pairs(std::size_t count) {
  std::vector<CommutingPair> out;
  const Field& f = m_->field();
  const std::size_t n = m_->algebra().dim(), d = m_->mod_dim();
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 64 * count + 64) {
    switch (fresh_cursor_++ % 3) {
      case 0: {
        if (families_.empty()) break;
        const auto& fam = families_[(fresh_cursor_ / 3) % families_.size()];
        Scalar lam = random_lambda(fresh_rng_);
        Scalar sx = Scalar::zero(f), sv = Scalar::zero(f);
        while (sx.is_zero()) sx = random_lambda(fresh_rng_);
        while (sv.is_zero()) sv = random_lambda(fresh_rng_);
        emit_verified(scale(sx, fam.x.eval(lam)), scale(sv, fam.y.eval(lam)), true, out);
        break;
      }
      case 1:
        emit_x_kernel(random_vector(fresh_rng_, n), out);
        break;
      case 2:
        emit_v_kernel(random_vector(fresh_rng_, d), out);
        break;
    }
  }
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace zpd
