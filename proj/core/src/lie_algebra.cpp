#include "zpd/lie_algebra.hpp"

#include <algorithm>

namespace zpd {

LieAlgebra::LieAlgebra(const Field& f, std::size_t n, std::vector<std::string> names)
    : field_(f), n_(n), names_(std::move(names)), table_(WedgeIndex(n).dim()) {
  if (names_.empty()) {
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != n) fail(errc::input, "names length must equal dimension");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVec& coeffs) {
  if (!(i < j) || j >= n_) fail(errc::input, "set_bracket: need i < j < dim");
  SparseVec clean;
  clean.reserve(coeffs.size());
  for (const auto& [k, v] : coeffs) {
    if (k >= n_) fail(errc::input, "set_bracket: coefficient index out of range");
    require_same_field(field_, v.field(), "set_bracket");
    if (!v.is_zero()) clean.emplace_back(k, v);
  }
  std::sort(clean.begin(), clean.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  table_[wedge().flat(i, j)] = std::move(clean);
}

void LieAlgebra::set_bracket_dense(std::size_t i, std::size_t j, const Vec& coeffs) {
  if (coeffs.size() != n_) fail(errc::input, "set_bracket_dense: length mismatch");
  SparseVec sv;
  for (std::size_t k = 0; k < n_; ++k)
    if (!coeffs[k].is_zero()) sv.emplace_back(k, coeffs[k]);
  set_bracket(i, j, sv);
}

const SparseVec& LieAlgebra::bracket_entry(std::size_t i, std::size_t j) const {
  return table_[wedge().flat(i, j)];
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out = zero_vec(field_, n_);
  if (i == j) return out;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  for (const auto& [k, v] : bracket_entry(i, j)) out[k] = flip ? -v : v;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) fail(errc::input, "bracket: dimension mismatch");
  Vec out = zero_vec(field_, n_);
  for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    Scalar t = x[i] * y[j] - x[j] * y[i];
    if (t.is_zero()) return;
    for (const auto& [k, v] : c) out[k] += t * v;
  });
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
  if (x.size() != n_) fail(errc::input, "ad_matrix: dimension mismatch");
  Matrix m(field_, n_, n_);
  for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    // column j gains x_i * c, column i gains -x_j * c
    if (!x[i].is_zero())
      for (const auto& [k, v] : c) m.at(k, j) += x[i] * v;
    if (!x[j].is_zero())
      for (const auto& [k, v] : c) m.at(k, i) -= x[j] * v;
  });
  return m;
}

Subspace LieAlgebra::derived_subalgebra() const {
  Subspace s(field_, n_);
  for_each_bracket([&](std::size_t, std::size_t, const SparseVec& c) {
    Vec v = zero_vec(field_, n_);
    for (const auto& [k, val] : c) v[k] = val;
    s.insert(v);
  });
  return s;
}

Subspace LieAlgebra::center() const {
  // z is central iff ad(e_i) z = 0 for all i; stack the ad matrices.
  Matrix stacked(field_, n_ * n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Matrix adi = ad_matrix(unit_vec(field_, n_, i));
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) stacked.at(i * n_ + r, c) = adi.at(r, c);
  }
  return kernel_basis(stacked);
}

Matrix LieAlgebra::bracket_map_matrix() const {
  WedgeIndex w = wedge();
  Matrix m(field_, n_, w.dim());
  for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    std::size_t col = w.flat(i, j);
    for (const auto& [k, v] : c) m.at(k, col) = v;
  });
  return m;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport report;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      Vec bij = bracket_basis(i, j);
      for (std::size_t k = j + 1; k < n_; ++k) {
        // [[e_i,e_j],e_k] + [[e_k,e_i],e_j] + [[e_j,e_k],e_i]
        Vec r = bracket(bij, unit_vec(field_, n_, k));
        r = add(r, bracket(bracket_basis(k, i), unit_vec(field_, n_, j)));
        r = add(r, bracket(bracket_basis(j, k), unit_vec(field_, n_, i)));
        if (!is_zero_vec(r)) report.failures.push_back({i, j, k, std::move(r)});
      }
    }
  return report;
}

void LieAlgebra::require_valid(const char* what) const {
  if (!validate().ok())
    fail(errc::input, std::string(what) + ": Jacobi identity fails");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  require_same_field(a.field(), b.field(), "direct_sum");
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  LieAlgebra s(a.field(), a.dim() + b.dim(), std::move(names));
  a.for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    s.set_bracket(i, j, c);
  });
  const std::size_t off = a.dim();
  b.for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    SparseVec shifted;
    for (const auto& [k, v] : c) shifted.emplace_back(k + off, v);
    s.set_bracket(i + off, j + off, shifted);
  });
  return s;
}

LieAlgebra tensor_with_comm(const LieAlgebra& L, const CommAlgebra& A) {
  require_same_field(L.field(), A.field(), "tensor_with_comm");
  if (!A.is_valid()) fail(errc::input, "tensor_with_comm: invalid commutative algebra");
  const std::size_t n = L.dim(), d = A.dim();
  std::vector<std::string> names;
  names.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      names.push_back(L.names()[i] + ".a" + std::to_string(j));
  LieAlgebra T(L.field(), n * d, std::move(names));
  auto flat = [d](std::size_t i, std::size_t j) { return i * d + j; };
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < d; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < d; ++j2) {
          std::size_t p = flat(i1, j1), q = flat(i2, j2);
          if (p >= q || i1 == i2) continue;  // [e⊗a, e⊗b] = 0 when i1 == i2
          Vec lie = L.bracket_basis(i1, i2);
          const Vec& prod = A.product_basis(j1, j2);
          SparseVec out;
          for (std::size_t k = 0; k < n; ++k) {
            if (lie[k].is_zero()) continue;
            for (std::size_t s = 0; s < d; ++s)
              if (!prod[s].is_zero()) out.emplace_back(flat(k, s), lie[k] * prod[s]);
          }
          T.set_bracket(p, q, out);
        }
  T.require_valid("tensor_with_comm");
  return T;
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient() != L.dim()) return false;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& row : s.basis())
      if (!s.contains(L.bracket(unit_vec(L.field(), L.dim(), i), row))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient() != L.dim()) return false;
  for (const auto& a : s.basis())
    for (const auto& b : s.basis())
      if (!s.contains(L.bracket(a, b))) return false;
  return true;
}

IdealHandle::IdealHandle(const LieAlgebra& L, Subspace subspace)
    : subspace_(std::move(subspace)) {
  require_same_field(L.field(), subspace_.field(), "ideal");
  if (!is_ideal(L, subspace_))
    fail(errc::input, "subspace is not an ideal: [L, I] is not contained in I");
}

std::pair<LieAlgebra, Matrix> quotient(const LieAlgebra& L, const IdealHandle& ideal) {
  const Subspace& I = ideal.subspace();
  const Field& f = L.field();
  const std::size_t n = L.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto c : I.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> comp;  // complement coordinates, deterministic
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const std::size_t m = comp.size();

  // projection: reduce mod I, then read off complement coordinates
  auto project = [&](const Vec& v) {
    Vec r = I.reduce(v);
    Vec out = zero_vec(f, m);
    for (std::size_t a = 0; a < m; ++a) out[a] = r[comp[a]];
    return out;
  };

  Matrix proj(f, m, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec p = project(unit_vec(f, n, c));
    for (std::size_t a = 0; a < m; ++a) proj.at(a, c) = p[a];
  }

  std::vector<std::string> names;
  for (auto c : comp) names.push_back(L.names()[c]);
  LieAlgebra Q(f, m, std::move(names));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec br = project(L.bracket_basis(comp[a], comp[b]));
      Q.set_bracket_dense(a, b, br);
    }
  Q.require_valid("quotient");
  return {Q, proj};
}

bool check_ideal_bracket_intersection(const LieAlgebra& L, const IdealHandle& ideal) {
  const Subspace& I = ideal.subspace();
  Subspace li(L.field(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& row : I.basis())
      li.insert(L.bracket(unit_vec(L.field(), L.dim(), i), row));
  Subspace rhs = L.derived_subalgebra().intersect(I);
  return li == rhs;
}

H2Dims h2_dimension(const LieAlgebra& L) {
  if (L.field().characteristic() == 2)
    fail(errc::unsupported_field, "H^2 over GF(2) is not supported (skew forms need char != 2)");
  const Field& f = L.field();
  const std::size_t n = L.dim();
  WedgeIndex w = L.wedge();
  const std::size_t wd = w.dim();

  // one cocycle equation per basis triple, unknowns = functionals on L∧L
  std::vector<Vec> rows;
  auto add_term = [&](Vec& row, std::size_t a, std::size_t b, const Scalar& coeff) {
    if (a == b) return;  // f(e_a, e_a) = 0 for skew forms
    if (a < b) row[w.flat(a, b)] += coeff;
    else row[w.flat(b, a)] -= coeff;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec row = zero_vec(f, wd);
        // f([e_i,e_j], e_k) + f([e_k,e_i], e_j) + f([e_j,e_k], e_i) = 0
        Vec bij = L.bracket_basis(i, j), bki = L.bracket_basis(k, i),
            bjk = L.bracket_basis(j, k);
        for (std::size_t m = 0; m < n; ++m) {
          if (!bij[m].is_zero()) add_term(row, m, k, bij[m]);
          if (!bki[m].is_zero()) add_term(row, m, j, bki[m]);
          if (!bjk[m].is_zero()) add_term(row, m, i, bjk[m]);
        }
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
      }

  std::size_t z2;
  if (rows.empty()) {
    z2 = wd;
  } else {
    Matrix constraints(f, rows.size(), wd);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < wd; ++c) constraints.at(r, c) = rows[r][c];
    z2 = kernel_basis(constraints).dim();
  }
  // coboundaries are the functionals Phi ∘ π, i.e. the row space of π
  std::size_t b2 = rank(L.bracket_map_matrix());
  return {z2, b2, z2 - b2};
}

bool is_centrally_closed(const LieAlgebra& L) { return h2_dimension(L).h2 == 0; }

}  // namespace zpd
