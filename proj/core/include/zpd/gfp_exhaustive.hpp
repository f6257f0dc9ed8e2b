#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "zpd/pairs.hpp"

namespace zpd {

/// Guard value p^(n-1) (the per-leading-coordinate enumeration budget),
/// saturating at uint64 max.
std::uint64_t projective_guard(std::uint32_t p, std::size_t n);

struct ExhaustiveSpan {
  Subspace span;
  std::vector<CommutingPair> contributors;  // pairs whose wedge/tensor grew the span
  std::uint64_t lines = 0;                  // projective representatives enumerated
};

/// Exact span of { x ∧ centralizer(x) } over GF(p), one representative per
/// projective line (first nonzero coordinate normalized to 1). Stops early
/// once the span reaches stop_at_dim. errc::budget_exceeded over the cap.
ExhaustiveSpan exhaustive_kprime_gfp(const LieAlgebra& L, std::uint64_t cap,
                                     std::size_t stop_at_dim = std::numeric_limits<std::size_t>::max());

/// Exact span of { x ⊗ ker ρ(x) } in L⊗V coordinates (flat index i*d+j).
ExhaustiveSpan exhaustive_kv_gfp(const LieModule& m, std::uint64_t cap,
                                 std::size_t stop_at_dim = std::numeric_limits<std::size_t>::max());

struct ProportionalScan {
  bool proportional = true;
  std::optional<CommutingPair> counterexample;  // commuting, linearly independent
  std::uint64_t lines = 0;
};

/// Checks centralizer(x) ⊆ span{x} for every projective representative.
ProportionalScan proportional_scan_gfp(const LieAlgebra& L, std::uint64_t cap);

}  // namespace zpd
