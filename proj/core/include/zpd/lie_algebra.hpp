#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zpd/comm_algebra.hpp"
#include "zpd/subspace.hpp"
#include "zpd/wedge.hpp"

namespace zpd {

/// Sparse coefficient vector: sorted (index, value) entries, values nonzero.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

struct JacobiFailure {
  std::size_t i, j, k;
  Vec residual;
};

struct ValidationReport {
  std::vector<JacobiFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Finite-dimensional Lie algebra by structure constants. Only brackets
/// [e_i, e_j] with i < j are stored; antisymmetry is structural.
class LieAlgebra {
 public:
  LieAlgebra(const Field& f, std::size_t n, std::vector<std::string> names = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  WedgeIndex wedge() const { return WedgeIndex(n_); }

  /// [e_i, e_j] = sum_k coeffs[k] e_k; requires i < j.
  void set_bracket(std::size_t i, std::size_t j, const SparseVec& coeffs);
  void set_bracket_dense(std::size_t i, std::size_t j, const Vec& coeffs);
  const SparseVec& bracket_entry(std::size_t i, std::size_t j) const;  // i < j

  Vec bracket_basis(std::size_t i, std::size_t j) const;  // any order, signed
  Vec bracket(const Vec& x, const Vec& y) const;

  /// n x n matrix of y -> [x, y].
  Matrix ad_matrix(const Vec& x) const;

  /// span of all [e_i, e_j]; its dimension is dim [L, L].
  Subspace derived_subalgebra() const;

  /// intersection of the kernels of all ad(e_i).
  Subspace center() const;

  /// n x n(n-1)/2 matrix of L∧L -> [L, L], column flat(i,j) = [e_i, e_j].
  Matrix bracket_map_matrix() const;

  /// Jacobi residuals for every basis triple; empty report means valid.
  ValidationReport validate() const;
  void require_valid(const char* what) const;

  /// Visits every stored (i, j, coeffs) with nonzero bracket.
  template <class F>
  void for_each_bracket(F&& fn) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const SparseVec& c = bracket_entry(i, j);
        if (!c.empty()) fn(i, j, c);
      }
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<SparseVec> table_;  // indexed by WedgeIndex::flat(i, j)
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// L ⊗ A on basis e_i ⊗ a_j (flat index i*dim(A)+j) with
/// [e_i⊗a_j, e_k⊗a_l] = [e_i,e_k] ⊗ (a_j a_l). Validates A and the result.
LieAlgebra tensor_with_comm(const LieAlgebra& L, const CommAlgebra& A);

/// Subspace of L validated to satisfy [L, I] ⊆ I.
class IdealHandle {
 public:
  IdealHandle(const LieAlgebra& L, Subspace subspace);  // errc::input if not an ideal
  const Subspace& subspace() const { return subspace_; }

 private:
  Subspace subspace_;
};

bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);

/// Quotient structure constants on the complement of I (the non-pivot
/// coordinates of I's echelon basis), plus the projection matrix L -> L/I.
std::pair<LieAlgebra, Matrix> quotient(const LieAlgebra& L, const IdealHandle& ideal);

/// True iff [L, I] equals [L, L] ∩ I as subspaces.
bool check_ideal_bracket_intersection(const LieAlgebra& L, const IdealHandle& ideal);

struct H2Dims {
  std::size_t z2, b2, h2;
};

/// Dimensions of 2-cocycles, coboundaries and H^2, solved as a linear system
/// on wedge coordinates (skew forms); refuses characteristic 2.
H2Dims h2_dimension(const LieAlgebra& L);

bool is_centrally_closed(const LieAlgebra& L);

}  // namespace zpd
