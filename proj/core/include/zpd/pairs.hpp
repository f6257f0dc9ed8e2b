#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zpd/module.hpp"
#include "zpd/rng.hpp"

namespace zpd {

/// Verified commuting pair (or module pair (x, v) with xv = 0; the second
/// component then lives in module coordinates).
struct CommutingPair {
  Vec x, y;
};

/// Vector of univariate polynomials in one parameter λ.
struct PolyVec {
  std::vector<Vec> coeff;  // coeff[k] is the λ^k coefficient vector

  std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
  Vec eval(const Scalar& lambda) const;
};

/// One-parameter polynomial family of pairs; [x(λ), y(λ)] = 0 as a polynomial
/// identity, certified by exact evaluation at 2D+1 distinct sample points
/// (capped at p over GF(p), where fewer distinct points exist).
struct PairFamily {
  std::string name;
  PolyVec x, y;

  std::size_t degree_bound() const {
    return x.degree() > y.degree() ? x.degree() : y.degree();
  }
};

struct SamplerConfig {
  std::uint64_t seed = 42;
  std::size_t rounds = 64;          // generator rounds budget
  int coeff_box = 3;                // Q sampling box [-3, 3]
  int lambda_radius = 4;            // λ-grid {0, ±1, ..., ±radius}
  std::size_t window = 8;           // stabilization window (rounds w/o growth)
  std::size_t validation = 200;     // fresh pairs per witness functional
  std::uint64_t exhaustive_cap = 10000000;  // refuse p^(n-1) beyond this
  bool exhaustive = false;
  bool use_families = true;
  bool use_basis = true;
  bool use_line_sweep = true;
  bool use_random = true;
};

/// ker ad(x): everything commuting with x.
Subspace centralizer(const LieAlgebra& L, const Vec& x);

/// Deterministic distinct sample points: 0, 1, -1, 2, -2, ... over Q;
/// residues 0..min(count,p)-1 over GF(p).
std::vector<Scalar> lambda_points(const Field& f, std::size_t count);

/// Certifies the polynomial identity product(x(λ), y(λ)) = 0 by evaluation;
/// throws errc::family_invalid on failure.
void certify_family(const PairFamily& fam, const Field& f,
                    const std::function<Vec(const Vec&, const Vec&)>& product);

/// Deterministic stream of verified commuting pairs for one Lie algebra.
/// Rounds: basis centralizers, certified families on the λ-grid, line sweeps
/// e_i + λ e_j, then random-box rounds until the budget is exhausted.
class PairGenerator {
 public:
  PairGenerator(const LieAlgebra& L, const SamplerConfig& cfg,
                std::vector<PairFamily> families);

  /// Emits the next round of pairs; false once the rounds budget is spent.
  bool next_round(std::vector<CommutingPair>& out);

  /// Validation stream: family evaluations at fresh parameters, fresh sweeps
  /// and random centralizer samples, each re-verified.
  std::vector<CommutingPair> fresh_pairs(std::size_t count);

  std::size_t rounds_done() const { return round_; }
  std::uint64_t pairs_emitted() const { return emitted_; }

 private:
  void emit_verified(Vec x, Vec y, bool from_family, std::vector<CommutingPair>& out);
  void emit_centralizer(const Vec& x, std::vector<CommutingPair>& out);
  Vec random_vector(Rng& rng);
  Scalar random_lambda(Rng& rng);

  const LieAlgebra* L_;
  SamplerConfig cfg_;
  std::vector<PairFamily> families_;
  std::vector<Scalar> grid_;
  Rng rng_;
  Rng fresh_rng_;
  std::size_t fresh_cursor_ = 0;
  std::size_t round_ = 0;
  std::uint64_t emitted_ = 0;
  std::vector<int> stages_;  // structured stages still pending (0 basis, 1 families, 2 sweep)
};

/// Same contract for module pairs (x, v) with xv = 0.
class ModulePairGenerator {
 public:
  ModulePairGenerator(const LieModule& m, const SamplerConfig& cfg,
                      std::vector<PairFamily> families);

  bool next_round(std::vector<CommutingPair>& out);
  std::vector<CommutingPair> fresh_pairs(std::size_t count);

  std::size_t rounds_done() const { return round_; }
  std::uint64_t pairs_emitted() const { return emitted_; }

 private:
  void emit_verified(Vec x, Vec v, bool from_family, std::vector<CommutingPair>& out);
  void emit_x_kernel(const Vec& x, std::vector<CommutingPair>& out);
  void emit_v_kernel(const Vec& v, std::vector<CommutingPair>& out);
  Vec random_vector(Rng& rng, std::size_t len);
  Scalar random_lambda(Rng& rng);

  const LieModule* m_;
  SamplerConfig cfg_;
  std::vector<PairFamily> families_;
  std::vector<Scalar> grid_;
  Rng rng_;
  Rng fresh_rng_;
  std::size_t fresh_cursor_ = 0;
  std::size_t round_ = 0;
  std::uint64_t emitted_ = 0;
  std::vector<int> stages_;  // 0 basis-x, 1 basis-v, 2 families, 3 sweep
};

}  // namespace zpd
