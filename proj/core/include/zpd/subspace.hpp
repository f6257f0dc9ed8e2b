#pragma once

#include <cstddef>
#include <vector>

#include "zpd/matrix.hpp"

namespace zpd {

/// Subspace of a coordinate space, maintained in reduced row-echelon form so
/// that equality of subspaces is literal equality of bases.
class Subspace {
 public:
  Subspace() : field_(Field::rationals()) {}
  Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace zero(const Field& f, std::size_t ambient) { return Subspace(f, ambient); }
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span_of(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Inserts v into the span, keeping RREF; returns whether the dimension grew.
  bool insert(const Vec& v);

  /// Reduces v against the basis (the residual is zero iff v is in the span).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the row basis; errc::input if v is not in the span.
  Vec coordinates_of(const Vec& v) const;

  /// Space of functionals vanishing on this subspace; dim = ambient - dim.
  Subspace annihilator() const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const;

  Matrix as_matrix() const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;            // RREF rows, nonzero, unit pivots
  std::vector<std::size_t> pivots_;   // strictly increasing pivot columns
};

}  // namespace zpd
