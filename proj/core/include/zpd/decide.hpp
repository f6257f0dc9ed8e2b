#pragma once

#include <optional>
#include <string>

#include "zpd/gfp_exhaustive.hpp"

namespace zpd {

enum class DecisionVerdict { certified, not_exhaustive, not_probabilistic, undecided };

const char* zpd_verdict_token(DecisionVerdict v);  // "ZPD_CERTIFIED", ...
const char* zad_verdict_token(DecisionVerdict v);  // "ZAD_CERTIFIED", ...

struct DecisionStats {
  std::size_t rounds = 0;
  std::uint64_t pairs = 0;
  bool exhaustive = false;
  std::uint64_t lines = 0;  // projective representatives enumerated
};

/// Replayable evidence that span K' (resp. K_V) is a proper subspace: a
/// functional xi vanishing on the accumulated span, an element mu of the
/// M-space with xi(mu) != 0, and mu presented as a sum of decomposables whose
/// bracket (action) sum is exactly zero.
struct Witness {
  Vec xi;
  Vec mu;
  std::vector<CommutingPair> mu_pairs;
  std::size_t validated = 0;  // fresh pairs on which xi vanished
};

struct Certificate {
  std::vector<CommutingPair> pairs;
};

struct ZpdDims {
  std::size_t n, derived, wedge, m_prime, k_prime;
};

struct ZpdReport {
  Field field;
  ZpdDims dims;
  DecisionVerdict verdict;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  DecisionStats stats;
  std::uint64_t seed = 0;
};

struct ZadDims {
  std::size_t n, d, tensor, lv, m_v, k_v;
};

struct ZadReport {
  Field field;
  ZadDims dims;
  DecisionVerdict verdict;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  DecisionStats stats;
  std::uint64_t seed = 0;
};

/// Kernel of the bracket map L∧L -> [L,L]; dim = n(n-1)/2 - dim [L,L].
Subspace mprime(const LieAlgebra& L);

/// Tensor coordinates of x ⊗ v with flat index i*d + j.
Vec tensor_coords(const Vec& x, const Vec& v);

/// Monotone accumulation of wedge coordinates of generated pairs; stops when
/// the span reaches dim M' or the budget/stabilization window triggers.
struct SpanAccumulation {
  Subspace span;
  std::vector<CommutingPair> contributors;
  std::size_t rounds = 0;
  std::uint64_t pairs = 0;
};
SpanAccumulation kprime_span(const LieAlgebra& L, const SamplerConfig& cfg,
                             std::vector<PairFamily> families = {});

ZpdReport decide_zpd(const LieAlgebra& L, const SamplerConfig& cfg,
                     std::vector<PairFamily> families = {});

ZadReport decide_zad(const LieModule& m, const SamplerConfig& cfg,
                     std::vector<PairFamily> families = {});

/// Picks xi in annihilator(span) not annihilating the M-space, and mu in the
/// M-space with xi(mu) != 0; ties broken by smallest pivot index.
/// Pre: dim span < dim mspace (with span ⊆ mspace).
Witness extract_witness(const Subspace& span, const Subspace& mspace);

struct VerifyResult {
  bool ok = false;
  std::string diagnosis;  // empty when ok
};

/// Replays a certificate: every pair must commute and the wedges must span
/// mprime(L) exactly.
VerifyResult verify_certificate(const LieAlgebra& L, const Certificate& cert);
VerifyResult verify_zad_certificate(const LieModule& m, const Certificate& cert);

enum class ProportionalVerdict { true_exhaustive, true_probabilistic, counterexample };
const char* proportional_token(ProportionalVerdict v);

struct ProportionalReport {
  ProportionalVerdict verdict;
  std::optional<CommutingPair> pair;  // commuting, linearly independent
  std::uint64_t checked = 0;          // lines or sampled elements
};

/// Checks whether any two commuting elements are linearly dependent;
/// cfg.exhaustive selects the exact GF(p) scan.
ProportionalReport is_proportional_commuting(const LieAlgebra& L, const SamplerConfig& cfg);

struct PreserveReport {
  bool preserves = true;
  std::optional<CommutingPair> violation;  // commuting in L, images do not commute
  std::uint64_t pairs_checked = 0;
};

/// Samples commuting pairs of `from` and checks [phi x, phi y] = 0 in `to`.
PreserveReport check_comm_preserving(const Matrix& phi, const LieAlgebra& from,
                                     const LieAlgebra& to, const SamplerConfig& cfg,
                                     std::vector<PairFamily> families = {});

}  // namespace zpd
