#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zpd/pairs.hpp"

namespace zpd::builtins {

/// sl2 with basis (E, H, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra sl2(const Field& f);

/// Heisenberg algebra of dimension 2k+1, basis (c, x_1..x_k, x_{-1}..x_{-k}),
/// [x_i, x_{-i}] = c.
LieAlgebra heisenberg(const Field& f, std::size_t k);

/// Simple sl2-module V(m) of dimension m+1 with the standard action
/// F v_i = v_{i+1}, E v_i = i(m+1-i) v_{i-1}, H v_i = (m-2i) v_i.
LieModule vm_module(const Field& f, std::size_t m);

/// Borel subalgebra b with basis (H, E), [H, E] = 2E.
LieAlgebra borel(const Field& f);

/// V(m) as a module over b (basis order H, E).
LieModule vm_borel_module(const Field& f, std::size_t m);

/// Galilei algebra sl2 ⋉ V(m), dimension m+4.
LieAlgebra galilei(const Field& f, std::size_t m);

/// b ⋉ V(m), dimension m+3.
LieAlgebra bm_algebra(const Field& f, std::size_t m);

/// Centerless aging algebra: basis (H, E, u, v) with [H,E] = 2E, [H,u] = u,
/// [H,v] = -v, [E,v] = u.
LieAlgebra age1(const Field& f);

/// 3-dimensional classification-grid algebras.
/// case 1: sl2. case 2 (params a, b): [x,y] = 0, [z,x] = y, [z,y] = a x + b y.
/// case 3 (params a, b, c): [u,v] = a w, [u,w] = b w, [v,w] = c w.
LieAlgebra dim3_family(const Field& f, int case_no, const std::vector<Scalar>& params);

/// L ⊗ F[t]/(t^N).
LieAlgebra truncated_current(const LieAlgebra& L, std::size_t N);

/// Total-degree <= N quotient of the quantum plane Lie algebra,
/// [t^m, t^n] = (q^{m2 n1} - q^{n2 m1}) t^{m+n}. Q only; q not 0, +-1.
LieAlgebra truncated_quantum_plane(const Field& f, const Scalar& q, std::size_t N);

struct ParsedBuiltin {
  std::variant<LieAlgebra, LieModule> value;
  std::string ref;                        // canonical reference
  std::optional<bool> expected_positive;  // zpd (algebras) / zad (modules) where stated
  std::vector<PairFamily> families;
};

/// Resolves a builtin reference ("sl2", "heisenberg:2", "vm:3", "galilei:1",
/// "bm:2", "age1", "borel", "dim3:3:1,0,0", "current:sl2:3", "qplane:2:2").
ParsedBuiltin parse(const Field& f, const std::string& ref);

struct CatalogEntry {
  std::string pattern;
  std::string description;
  std::string expected;  // stated verdict or "-"
};
const std::vector<CatalogEntry>& catalog();

/// Structured pair families for a construction; empty for unknown tags.
std::vector<PairFamily> families_for_algebra(const Field& f, const std::string& ref);
std::vector<PairFamily> families_for_module(const Field& f, const std::string& ref);

}  // namespace zpd::builtins
