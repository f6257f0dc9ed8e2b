#pragma once

#include <cstddef>
#include <vector>

#include "zpd/lie_algebra.hpp"

namespace zpd {

struct ModuleFailure {
  std::size_t i, j;
  Matrix residual;  // rho([e_i,e_j]) - (rho_i rho_j - rho_j rho_i)
};

struct ModuleValidationReport {
  std::vector<ModuleFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Finite-dimensional module over a LieAlgebra: one d x d action matrix per
/// algebra basis vector, validated against the brackets.
class LieModule {
 public:
  LieModule(LieAlgebra algebra, std::vector<Matrix> rho);

  const LieAlgebra& algebra() const { return algebra_; }
  const Field& field() const { return algebra_.field(); }
  std::size_t mod_dim() const { return d_; }
  std::size_t tensor_dim() const { return algebra_.dim() * d_; }
  const std::vector<Matrix>& rho() const { return rho_; }

  /// Lists all pairs (i, j) violating rho([e_i,e_j]) = [rho_i, rho_j].
  ModuleValidationReport validate_module() const;
  void require_valid(const char* what) const;

  Matrix rho_of(const Vec& x) const;          // sum_i x_i rho_i
  Vec act(const Vec& x, const Vec& v) const;  // x · v

  /// d x (n·d) matrix of L⊗V -> V, e_i⊗v_j -> rho_i v_j, flat index i*d+j.
  Matrix action_map_matrix() const;

  /// Column space of the action map: the subspace LV of V.
  Subspace lv_subspace() const;

  /// d x n matrix of x -> x·v (columns rho_i v), used to solve xv = 0 for x.
  Matrix action_on_vector_matrix(const Vec& v) const;

 private:
  LieAlgebra algebra_;
  std::size_t d_;
  std::vector<Matrix> rho_;
};

LieModule trivial_module(const LieAlgebra& L, std::size_t d);

LieModule direct_sum_modules(const LieModule& a, const LieModule& b);

/// Module over the subalgebra spanned by S (validated to be closed under the
/// bracket); the subalgebra's structure constants are computed in S's echelon
/// basis.
LieModule restrict_module(const LieModule& m, const Subspace& s);

/// Semidirect product L ⋉ V on L ⊕ V with [x+u, y+v] = [x,y] + xv - yu;
/// V sits as an abelian ideal in the trailing coordinates.
LieAlgebra semidirect(const LieModule& m);

}  // namespace zpd
