#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zpd/scalar.hpp"

namespace zpd {

using Vec = std::vector<Scalar>;

class Subspace;

/// Dense row-major matrix of exact scalars with a single field tag.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Vec apply(const Vec& x) const;        // this * x
  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  /// Stacks o below this (same column count).
  Matrix vstack(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Reduced row-echelon form and its pivot columns; the row space is preserved.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Null space of m as an echelon subspace of ambient dimension cols(m).
Subspace kernel_basis(const Matrix& m);

// small vector helpers shared across the project
Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace zpd
