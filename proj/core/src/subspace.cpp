#include "zpd/subspace.hpp"

#include <algorithm>

namespace zpd {

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.insert(unit_vec(f, ambient, i));
  return s;
}

Subspace Subspace::span_of(const Field& f, std::size_t ambient,
                           const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::input, "subspace reduce: dimension mismatch");
  Vec w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& lead = w[pivots_[r]];
    if (!lead.is_zero()) {
      const Scalar factor = lead;  // pivot entries are 1
      for (std::size_t c = pivots_[r]; c < ambient_; ++c)
        if (!basis_[r][c].is_zero()) w[c] = w[c] - factor * basis_[r][c];
    }
  }
  return w;
}

bool Subspace::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t lead = ambient_;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!w[c].is_zero()) { lead = c; break; }
  if (lead == ambient_) return false;
  Scalar inv = w[lead].inverse();
  for (std::size_t c = lead; c < ambient_; ++c) w[c] = w[c] * inv;
  // clear the new pivot column in existing rows to stay in RREF
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar factor = basis_[r][lead];
    if (!factor.is_zero())
      for (std::size_t c = lead; c < ambient_; ++c)
        if (!w[c].is_zero()) basis_[r][c] = basis_[r][c] - factor * w[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  basis_.insert(basis_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::input, "coordinates_of: dimension mismatch");
  Vec w = v;
  Vec coords(basis_.size(), Scalar::zero(field_));
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar lead = w[pivots_[r]];
    if (!lead.is_zero()) {
      coords[r] = lead;
      for (std::size_t c = pivots_[r]; c < ambient_; ++c)
        if (!basis_[r][c].is_zero()) w[c] = w[c] - lead * basis_[r][c];
    }
  }
  if (!is_zero_vec(w)) fail(errc::input, "coordinates_of: vector not in subspace");
  return coords;
}

Subspace Subspace::annihilator() const {
  // w is a functional vanishing on the span iff basis * w^T = 0
  Matrix m(field_, basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = basis_[r][c];
  return kernel_basis(m);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_field(field_, other.field_, "subspace intersect");
  if (ambient_ != other.ambient_) fail(errc::input, "intersect: ambient mismatch");
  // U ∩ W = ann(ann(U) + ann(W))
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_field(field_, other.field_, "subspace sum");
  if (ambient_ != other.ambient_) fail(errc::input, "sum: ambient mismatch");
  Subspace s = *this;
  for (const auto& row : other.basis_) s.insert(row);
  return s;
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ &&
         pivots_ == other.pivots_ && basis_ == other.basis_;
}

Matrix Subspace::as_matrix() const {
  Matrix m(field_, basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = basis_[r][c];
  return m;
}

}  // namespace zpd
