#include "zpd/matrix.hpp"

#include "zpd/subspace.hpp"

namespace zpd {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  require_same_field(field_, v.field(), "matrix entry");
  e_[r * cols_ + c] = v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) fail(errc::input, "matrix apply: dimension mismatch");
  Vec out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& m = at(r, c);
      if (!m.is_zero() && !x[c].is_zero()) acc += m * x[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix *");
  if (cols_ != o.rows_) fail(errc::input, "matrix *: shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix -");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::input, "matrix -: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::vstack(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix vstack");
  if (cols_ != o.cols_) fail(errc::input, "vstack: column mismatch");
  Matrix out(field_, rows_ + o.rows_, cols_);
  out.e_.assign(e_.begin(), e_.end());
  out.e_.insert(out.e_.end(), o.e_.begin(), o.e_.end());
  return out;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { sel = i; break; }
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(sel, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Subspace kernel_basis(const Matrix& m) {
  auto [R, piv] = rref(m);
  const Field& f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  Subspace ker(f, n);
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(f, n);
    v[fc] = Scalar::one(f);
    for (std::size_t ri = 0; ri < piv.size(); ++ri) v[piv[ri]] = -R.at(ri, fc);
    ker.insert(v);
  }
  return ker;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::input, "vector +: length mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::input, "vector -: length mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x = c * x;
  return out;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::input, "dot: length mismatch");
  if (a.empty()) fail(errc::input, "dot: empty vectors");
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

}  // namespace zpd
