#include "zpd/comm_algebra.hpp"

namespace zpd {

CommAlgebra::CommAlgebra(const Field& f, std::size_t d, std::size_t unit_index)
    : field_(f), d_(d), unit_(unit_index), table_(d * d, zero_vec(f, d)) {
  if (d == 0) fail(errc::input, "commutative algebra needs dimension >= 1");
  if (unit_index >= d) fail(errc::input, "unit index out of range");
  for (std::size_t j = 0; j < d; ++j) {
    table_[unit_ * d_ + j][j] = Scalar::one(f);
    table_[j * d_ + unit_][j] = Scalar::one(f);
  }
}

void CommAlgebra::set_product(std::size_t i, std::size_t j, const Vec& coeffs) {
  if (i >= d_ || j >= d_ || coeffs.size() != d_)
    fail(errc::input, "set_product: index/length out of range");
  table_[i * d_ + j] = coeffs;
  table_[j * d_ + i] = coeffs;
}

const Vec& CommAlgebra::product_basis(std::size_t i, std::size_t j) const {
  return table_[i * d_ + j];
}

Vec CommAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != d_ || b.size() != d_) fail(errc::input, "multiply: length mismatch");
  Vec out = zero_vec(field_, d_);
  for (std::size_t i = 0; i < d_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar t = a[i] * b[j];
      const Vec& prod = product_basis(i, j);
      for (std::size_t k = 0; k < d_; ++k)
        if (!prod[k].is_zero()) out[k] += t * prod[k];
    }
  }
  return out;
}

std::vector<std::string> CommAlgebra::validate() const {
  std::vector<std::string> problems;
  auto basis = [&](std::size_t i) { return unit_vec(field_, d_, i); };
  for (std::size_t i = 0; i < d_; ++i) {
    // unit law
    if (product_basis(unit_, i) != basis(i))
      problems.push_back("unit law fails on basis " + std::to_string(i));
    for (std::size_t j = i; j < d_; ++j) {
      if (product_basis(i, j) != product_basis(j, i))
        problems.push_back("commutativity fails on (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      for (std::size_t k = 0; k < d_; ++k) {
        // (a_i a_j) a_k == a_i (a_j a_k)
        Vec lhs = multiply(product_basis(i, j), basis(k));
        Vec rhs = multiply(basis(i), product_basis(j, k));
        if (lhs != rhs)
          problems.push_back("associativity fails on (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  return problems;
}

bool CommAlgebra::is_valid() const { return validate().empty(); }

CommAlgebra CommAlgebra::ground_field(const Field& f) { return CommAlgebra(f, 1, 0); }

CommAlgebra CommAlgebra::truncated_poly(const Field& f, std::size_t N) {
  if (N < 1) fail(errc::input, "truncated_poly: N >= 1 required");
  CommAlgebra A(f, N, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      Vec prod = zero_vec(f, N);
      if (i + j < N) prod[i + j] = Scalar::one(f);
      A.set_product(i, j, prod);
    }
  return A;
}

}  // namespace zpd
