#include "zpd/decide.hpp"

namespace zpd {

const char* zpd_verdict_token(DecisionVerdict v) {
  switch (v) {
    case DecisionVerdict::certified: return "ZPD_CERTIFIED";
    case DecisionVerdict::not_exhaustive: return "NOT_ZPD_EXHAUSTIVE";
    case DecisionVerdict::not_probabilistic: return "NOT_ZPD_PROBABILISTIC";
    case DecisionVerdict::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

const char* zad_verdict_token(DecisionVerdict v) {
  switch (v) {
    case DecisionVerdict::certified: return "ZAD_CERTIFIED";
    case DecisionVerdict::not_exhaustive: return "NOT_ZAD_EXHAUSTIVE";
    case DecisionVerdict::not_probabilistic: return "NOT_ZAD_PROBABILISTIC";
    case DecisionVerdict::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

const char* proportional_token(ProportionalVerdict v) {
  switch (v) {
    case ProportionalVerdict::true_exhaustive: return "TRUE_EXHAUSTIVE";
    case ProportionalVerdict::true_probabilistic: return "TRUE_PROBABILISTIC";
    case ProportionalVerdict::counterexample: return "FALSE";
  }
  return "FALSE";
}

Subspace mprime(const LieAlgebra& L) { return kernel_basis(L.bracket_map_matrix()); }

Vec tensor_coords(const Vec& x, const Vec& v) {
  if (x.empty() || v.empty()) fail(errc::input, "tensor_coords: empty vector");
  const Field& f = x[0].field();
  Vec out(x.size() * v.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out[i * v.size() + j] = x[i] * v[j];
  }
  return out;
}

namespace {

void refuse_char2(const Field& f, const char* what) {
  if (f.characteristic() == 2)
    fail(errc::unsupported_field, std::string(what) + " refuses characteristic 2");
}

// mu as a sum of decomposable wedges (c e_i) ∧ e_j; the bracket sum is then
// exactly the bracket-map image of mu, which vanishes since mu lies in M'.
std::vector<CommutingPair> decompose_wedge(const Vec& mu, const LieAlgebra& L) {
  std::vector<CommutingPair> out;
  WedgeIndex w = L.wedge();
  const Field& f = L.field();
  for (std::size_t t = 0; t < mu.size(); ++t) {
    if (mu[t].is_zero()) continue;
    auto [i, j] = w.unflat(t);
    out.push_back({scale(mu[t], unit_vec(f, L.dim(), i)), unit_vec(f, L.dim(), j)});
  }
  return out;
}

std::vector<CommutingPair> decompose_tensor(const Vec& mu, std::size_t n, std::size_t d,
                                            const Field& f) {
  std::vector<CommutingPair> out;
  for (std::size_t t = 0; t < mu.size(); ++t) {
    if (mu[t].is_zero()) continue;
    std::size_t i = t / d, j = t % d;
    out.push_back({scale(mu[t], unit_vec(f, n, i)), unit_vec(f, d, j)});
  }
  return out;
}

}  // namespace

Witness extract_witness(const Subspace& span, const Subspace& mspace) {
  if (span.dim() >= mspace.dim())
    fail(errc::input, "extract_witness: span is not a proper subspace of the M-space");
  Subspace ann = span.annihilator();
  for (const auto& xi : ann.basis()) {
    for (const auto& mu : mspace.basis()) {
      if (!dot(xi, mu).is_zero()) {
        Witness w;
        w.xi = xi;
        w.mu = mu;
        return w;
      }
    }
  }
  fail(errc::input, "extract_witness: no separating functional found");
}

SpanAccumulation kprime_span(const LieAlgebra& L, const SamplerConfig& cfg,
                             std::vector<PairFamily> families) {
  L.require_valid("kprime_span");
  const WedgeIndex w = L.wedge();
  const std::size_t target = mprime(L).dim();
  SpanAccumulation acc{Subspace(L.field(), w.dim()), {}, 0, 0};
  PairGenerator gen(L, cfg, std::move(families));
  std::vector<CommutingPair> batch;
  std::size_t quiet = 0;
  while (acc.span.dim() < target) {
    batch.clear();
    if (!gen.next_round(batch)) break;
    bool grew = false;
    for (auto& pr : batch) {
      if (acc.span.insert(wedge_coords(pr.x, pr.y, w))) {
        acc.contributors.push_back(std::move(pr));
        grew = true;
      }
    }
    quiet = grew ? 0 : quiet + 1;
    if (quiet >= cfg.window) break;
  }
  acc.rounds = gen.rounds_done();
  acc.pairs = gen.pairs_emitted();
  return acc;
}

ZpdReport decide_zpd(const LieAlgebra& L, const SamplerConfig& cfg,
                     std::vector<PairFamily> families) {
  refuse_char2(L.field(), "decide_zpd");
  L.require_valid("decide_zpd");
  const WedgeIndex w = L.wedge();
  Subspace mp = mprime(L);

  ZpdReport rep;
  rep.field = L.field();
  rep.seed = cfg.seed;
  rep.dims = {L.dim(), L.derived_subalgebra().dim(), w.dim(), mp.dim(), 0};

  if (mp.dim() == 0) {
    rep.verdict = DecisionVerdict::certified;
    rep.certificate = Certificate{};
    return rep;
  }

  if (L.field().is_prime() && cfg.exhaustive) {
    ExhaustiveSpan ex = exhaustive_kprime_gfp(L, cfg.exhaustive_cap, mp.dim());
    rep.stats.exhaustive = true;
    rep.stats.lines = ex.lines;
    rep.stats.pairs = ex.contributors.size();
    rep.dims.k_prime = ex.span.dim();
    if (ex.span.dim() == mp.dim()) {
      rep.verdict = DecisionVerdict::certified;
      rep.certificate = Certificate{std::move(ex.contributors)};
      return rep;
    }
    Witness wit = extract_witness(ex.span, mp);
    wit.mu_pairs = decompose_wedge(wit.mu, L);
    PairGenerator gen(L, cfg, std::move(families));
    for (const auto& pr : gen.fresh_pairs(cfg.validation)) {
      if (!dot(wit.xi, wedge_coords(pr.x, pr.y, w)).is_zero())
        fail(errc::input, "internal: exhaustive witness violated by a commuting pair");
      ++wit.validated;
    }
    rep.verdict = DecisionVerdict::not_exhaustive;
    rep.witness = std::move(wit);
    return rep;
  }

  SpanAccumulation acc = kprime_span(L, cfg, families);
  rep.stats.rounds = acc.rounds;
  rep.stats.pairs = acc.pairs;
  rep.dims.k_prime = acc.span.dim();
  if (acc.span.dim() == mp.dim()) {
    rep.verdict = DecisionVerdict::certified;
    rep.certificate = Certificate{std::move(acc.contributors)};
    return rep;
  }

  Witness wit = extract_witness(acc.span, mp);
  wit.mu_pairs = decompose_wedge(wit.mu, L);
  bool valid = true;
  PairGenerator vgen(L, cfg, std::move(families));
  for (const auto& pr : vgen.fresh_pairs(cfg.validation)) {
    if (!dot(wit.xi, wedge_coords(pr.x, pr.y, w)).is_zero()) {
      valid = false;
      break;
    }
    ++wit.validated;
  }
  if (valid) {
    rep.verdict = DecisionVerdict::not_probabilistic;
    rep.witness = std::move(wit);
  } else {
    rep.verdict = DecisionVerdict::undecided;
  }
  return rep;
}

ZadReport decide_zad(const LieModule& m, const SamplerConfig& cfg,
                     std::vector<PairFamily> families) {
  refuse_char2(m.field(), "decide_zad");
  m.require_valid("decide_zad");
  const std::size_t n = m.algebra().dim(), d = m.mod_dim();
  Subspace mv = kernel_basis(m.action_map_matrix());
  Subspace lv = m.lv_subspace();

  ZadReport rep;
  rep.field = m.field();
  rep.seed = cfg.seed;
  rep.dims = {n, d, n * d, lv.dim(), mv.dim(), 0};

  if (mv.dim() == 0) {
    rep.verdict = DecisionVerdict::certified;
    rep.certificate = Certificate{};
    return rep;
  }

  if (m.field().is_prime() && cfg.exhaustive) {
    ExhaustiveSpan ex = exhaustive_kv_gfp(m, cfg.exhaustive_cap, mv.dim());
    rep.stats.exhaustive = true;
    rep.stats.lines = ex.lines;
    rep.stats.pairs = ex.contributors.size();
    rep.dims.k_v = ex.span.dim();
    if (ex.span.dim() == mv.dim()) {
      rep.verdict = DecisionVerdict::certified;
      rep.certificate = Certificate{std::move(ex.contributors)};
      return rep;
    }
    Witness wit = extract_witness(ex.span, mv);
    wit.mu_pairs = decompose_tensor(wit.mu, n, d, m.field());
    ModulePairGenerator gen(m, cfg, std::move(families));
    for (const auto& pr : gen.fresh_pairs(cfg.validation)) {
      if (!dot(wit.xi, tensor_coords(pr.x, pr.y)).is_zero())
        fail(errc::input, "internal: exhaustive witness violated by a module pair");
      ++wit.validated;
    }
    rep.verdict = DecisionVerdict::not_exhaustive;
    rep.witness = std::move(wit);
    return rep;
  }

  Subspace span(m.field(), n * d);
  std::vector<CommutingPair> contributors;
  ModulePairGenerator gen(m, cfg, families);
  std::vector<CommutingPair> batch;
  std::size_t quiet = 0;
  while (span.dim() < mv.dim()) {
    batch.clear();
    if (!gen.next_round(batch)) break;
    bool grew = false;
    for (auto& pr : batch) {
      if (span.insert(tensor_coords(pr.x, pr.y))) {
        contributors.push_back(std::move(pr));
        grew = true;
      }
    }
    quiet = grew ? 0 : quiet + 1;
    if (quiet >= cfg.window) break;
  }
  rep.stats.rounds = gen.rounds_done();
  rep.stats.pairs = gen.pairs_emitted();
  rep.dims.k_v = span.dim();
  if (span.dim() == mv.dim()) {
    rep.verdict = DecisionVerdict::certified;
    rep.certificate = Certificate{std::move(contributors)};
    return rep;
  }

  Witness wit = extract_witness(span, mv);
  wit.mu_pairs = decompose_tensor(wit.mu, n, d, m.field());
  bool valid = true;
  for (const auto& pr : gen.fresh_pairs(cfg.validation)) {
    if (!dot(wit.xi, tensor_coords(pr.x, pr.y)).is_zero()) {
      valid = false;
      break;
    }
    ++wit.validated;
  }
  if (valid) {
    rep.verdict = DecisionVerdict::not_probabilistic;
    rep.witness = std::move(wit);
  } else {
    rep.verdict = DecisionVerdict::undecided;
  }
  return rep;
}

VerifyResult verify_certificate(const LieAlgebra& L, const Certificate& cert) {
  const WedgeIndex w = L.wedge();
  Subspace span(L.field(), w.dim());
  for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
    const auto& pr = cert.pairs[k];
    if (pr.x.size() != L.dim() || pr.y.size() != L.dim())
      return {false, "pair " + std::to_string(k) + " has wrong dimension"};
    if (!is_zero_vec(L.bracket(pr.x, pr.y)))
      return {false, "pair " + std::to_string(k) + " fails the commuting check"};
    span.insert(wedge_coords(pr.x, pr.y, w));
  }
  Subspace mp = mprime(L);
  if (!(span == mp))
    return {false, "wedge span has dimension " + std::to_string(span.dim()) +
                       " but M' has dimension " + std::to_string(mp.dim())};
  return {true, ""};
}

VerifyResult verify_zad_certificate(const LieModule& m, const Certificate& cert) {
  Subspace span(m.field(), m.tensor_dim());
  for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
    const auto& pr = cert.pairs[k];
    if (pr.x.size() != m.algebra().dim() || pr.y.size() != m.mod_dim())
      return {false, "pair " + std::to_string(k) + " has wrong dimension"};
    if (!is_zero_vec(m.act(pr.x, pr.y)))
      return {false, "pair " + std::to_string(k) + " fails the xv = 0 check"};
    span.insert(tensor_coords(pr.x, pr.y));
  }
  Subspace mv = kernel_basis(m.action_map_matrix());
  if (!(span == mv))
    return {false, "tensor span has dimension " + std::to_string(span.dim()) +
                       " but M_V has dimension " + std::to_string(mv.dim())};
  return {true, ""};
}

ProportionalReport is_proportional_commuting(const LieAlgebra& L, const SamplerConfig& cfg) {
  L.require_valid("is_proportional_commuting");
  const Field& f = L.field();
  const std::size_t n = L.dim();

  auto probe = [&](const Vec& x) -> std::optional<CommutingPair> {
    if (is_zero_vec(x)) return std::nullopt;
    Subspace c = centralizer(L, x);
    if (c.dim() <= 1) return std::nullopt;
    Subspace line(f, n);
    line.insert(x);
    for (const auto& y : c.basis())
      if (!line.contains(y)) return CommutingPair{x, y};
    return std::nullopt;
  };

  ProportionalReport rep{ProportionalVerdict::true_probabilistic, std::nullopt, 0};
  if (f.is_prime() && cfg.exhaustive) {
    ProportionalScan scan = proportional_scan_gfp(L, cfg.exhaustive_cap);
    rep.checked = scan.lines;
    if (scan.proportional) {
      rep.verdict = ProportionalVerdict::true_exhaustive;
    } else {
      rep.verdict = ProportionalVerdict::counterexample;
      rep.pair = scan.counterexample;
    }
    return rep;
  }

  Rng rng(cfg.seed);
  std::vector<Scalar> grid = lambda_points(f, 2 * static_cast<std::size_t>(cfg.lambda_radius) + 1);
  // basis vectors, line sweeps, then random sampling
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checked;
    if (auto ce = probe(unit_vec(f, n, i))) {
      rep.verdict = ProportionalVerdict::counterexample;
      rep.pair = ce;
      return rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& lam : grid) {
        if (lam.is_zero()) continue;
        Vec x = unit_vec(f, n, i);
        x[j] = lam;
        ++rep.checked;
        if (auto ce = probe(x)) {
          rep.verdict = ProportionalVerdict::counterexample;
          rep.pair = ce;
          return rep;
        }
      }
    }
  for (std::size_t r = 0; r < cfg.rounds * n; ++r) {
    Vec x = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = f.is_rational() ? Scalar::from_int(f, rng.boxed(cfg.coeff_box))
                             : Scalar::from_int(f, static_cast<long long>(rng.below(f.p)));
    ++rep.checked;
    if (auto ce = probe(x)) {
      rep.verdict = ProportionalVerdict::counterexample;
      rep.pair = ce;
      return rep;
    }
  }
  return rep;
}

PreserveReport check_comm_preserving(const Matrix& phi, const LieAlgebra& from,
                                     const LieAlgebra& to, const SamplerConfig& cfg,
                                     std::vector<PairFamily> families) {
  require_same_field(from.field(), to.field(), "check_comm_preserving");
  require_same_field(phi.field(), from.field(), "check_comm_preserving");
  if (phi.cols() != from.dim() || phi.rows() != to.dim())
    fail(errc::input, "map shape mismatch: expected " + std::to_string(to.dim()) + "x" +
                          std::to_string(from.dim()));
  from.require_valid("check_comm_preserving");
  to.require_valid("check_comm_preserving");

  PreserveReport rep;
  PairGenerator gen(from, cfg, std::move(families));
  std::vector<CommutingPair> batch;
  while (gen.next_round(batch)) {
    for (auto& pr : batch) {
      ++rep.pairs_checked;
      if (!is_zero_vec(to.bracket(phi.apply(pr.x), phi.apply(pr.y)))) {
        rep.preserves = false;
        rep.violation = std::move(pr);
        return rep;
      }
    }
    batch.clear();
  }
  return rep;
}

}  // namespace zpd
