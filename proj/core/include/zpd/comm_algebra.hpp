#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zpd/matrix.hpp"

namespace zpd {

/// Commutative associative unital algebra by multiplication constants.
/// Commutativity, associativity and the unit law are validated exactly on
/// basis elements.
class CommAlgebra {
 public:
  CommAlgebra(const Field& f, std::size_t d, std::size_t unit_index);

  /// Sets a_i * a_j (and a_j * a_i) = sum_k coeffs[k] a_k.
  void set_product(std::size_t i, std::size_t j, const Vec& coeffs);

  const Field& field() const { return field_; }
  std::size_t dim() const { return d_; }
  std::size_t unit_index() const { return unit_; }

  const Vec& product_basis(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& a, const Vec& b) const;

  bool is_valid() const;
  /// Human-readable reasons for invalidity; empty when valid.
  std::vector<std::string> validate() const;

  /// The ground field viewed as a one-dimensional algebra.
  static CommAlgebra ground_field(const Field& f);
  /// F[t]/(t^N), basis 1, t, ..., t^{N-1}.
  static CommAlgebra truncated_poly(const Field& f, std::size_t N);

 private:
  Field field_;
  std::size_t d_;
  std::size_t unit_;
  std::vector<Vec> table_;  // table_[i*d+j] = coefficients of a_i a_j
};

}  // namespace zpd
