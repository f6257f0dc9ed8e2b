#include "zpd/module.hpp"

namespace zpd {

LieModule::LieModule(LieAlgebra algebra, std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), rho_(std::move(rho)) {
  if (rho_.size() != algebra_.dim())
    fail(errc::input, "module needs one action matrix per algebra basis vector");
  d_ = rho_.empty() ? 0 : rho_[0].rows();
  for (const auto& m : rho_) {
    require_same_field(algebra_.field(), m.field(), "module action");
    if (m.rows() != d_ || m.cols() != d_)
      fail(errc::input, "action matrices must all be d x d");
  }
}

ModuleValidationReport LieModule::validate_module() const {
  ModuleValidationReport report;
  const std::size_t n = algebra_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(field(), d_, d_);
      for (const auto& [k, c] : algebra_.bracket_entry(i, j))
        for (std::size_t r = 0; r < d_; ++r)
          for (std::size_t s = 0; s < d_; ++s)
            if (!rho_[k].at(r, s).is_zero()) lhs.at(r, s) += c * rho_[k].at(r, s);
      Matrix comm = rho_[i] * rho_[j] - rho_[j] * rho_[i];
      Matrix residual = lhs - comm;
      if (!residual.is_zero()) report.failures.push_back({i, j, std::move(residual)});
    }
  return report;
}

void LieModule::require_valid(const char* what) const {
  if (!validate_module().ok())
    fail(errc::input, std::string(what) + ": representation identity fails");
}

Matrix LieModule::rho_of(const Vec& x) const {
  if (x.size() != algebra_.dim()) fail(errc::input, "rho_of: dimension mismatch");
  Matrix m(field(), d_, d_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t r = 0; r < d_; ++r)
      for (std::size_t c = 0; c < d_; ++c)
        if (!rho_[i].at(r, c).is_zero()) m.at(r, c) += x[i] * rho_[i].at(r, c);
  }
  return m;
}

Vec LieModule::act(const Vec& x, const Vec& v) const { return rho_of(x).apply(v); }

Matrix LieModule::action_map_matrix() const {
  const std::size_t n = algebra_.dim();
  Matrix m(field(), d_, n * d_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t r = 0; r < d_; ++r)
        m.at(r, i * d_ + j) = rho_[i].at(r, j);
  return m;
}

Subspace LieModule::lv_subspace() const {
  Subspace s(field(), d_);
  Matrix a = action_map_matrix();
  for (std::size_t c = 0; c < a.cols(); ++c) s.insert(a.col(c));
  return s;
}

Matrix LieModule::action_on_vector_matrix(const Vec& v) const {
  if (v.size() != d_) fail(errc::input, "action_on_vector: dimension mismatch");
  const std::size_t n = algebra_.dim();
  Matrix m(field(), d_, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec col = rho_[i].apply(v);
    for (std::size_t r = 0; r < d_; ++r) m.at(r, i) = col[r];
  }
  return m;
}

LieModule trivial_module(const LieAlgebra& L, std::size_t d) {
  return LieModule(L, std::vector<Matrix>(L.dim(), Matrix(L.field(), d, d)));
}

LieModule direct_sum_modules(const LieModule& a, const LieModule& b) {
  require_same_field(a.field(), b.field(), "direct_sum_modules");
  // same parent algebra required
  if (!(a.algebra().dim() == b.algebra().dim())) fail(errc::input, "parent algebra mismatch");
  for (std::size_t i = 0; i < a.algebra().dim(); ++i)
    for (std::size_t j = i + 1; j < a.algebra().dim(); ++j)
      if (a.algebra().bracket_entry(i, j) != b.algebra().bracket_entry(i, j))
        fail(errc::input, "parent algebra mismatch");
  const std::size_t da = a.mod_dim(), db = b.mod_dim();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    Matrix m(a.field(), da + db, da + db);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c) m.at(r, c) = a.rho()[i].at(r, c);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < db; ++c) m.at(da + r, da + c) = b.rho()[i].at(r, c);
    rho.push_back(std::move(m));
  }
  return LieModule(a.algebra(), std::move(rho));
}

LieModule restrict_module(const LieModule& m, const Subspace& s) {
  const LieAlgebra& L = m.algebra();
  if (!is_subalgebra(L, s)) fail(errc::input, "restrict_module: subspace is not a subalgebra");
  const std::size_t k = s.dim();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) names.push_back("s" + std::to_string(a));
  LieAlgebra sub(L.field(), k, std::move(names));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vec br = L.bracket(s.basis()[a], s.basis()[b]);
      sub.set_bracket_dense(a, b, s.coordinates_of(br));
    }
  sub.require_valid("restrict_module");
  std::vector<Matrix> rho;
  for (std::size_t a = 0; a < k; ++a) rho.push_back(m.rho_of(s.basis()[a]));
  LieModule out(std::move(sub), std::move(rho));
  out.require_valid("restrict_module");
  return out;
}

LieAlgebra semidirect(const LieModule& m) {
  m.require_valid("semidirect");
  const LieAlgebra& L = m.algebra();
  const std::size_t n = L.dim(), d = m.mod_dim();
  std::vector<std::string> names = L.names();
  for (std::size_t j = 0; j < d; ++j) names.push_back("v" + std::to_string(j));
  LieAlgebra S(L.field(), n + d, std::move(names));
  L.for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    S.set_bracket(i, j, c);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec col;
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar& v = m.rho()[i].at(r, j);
        if (!v.is_zero()) col.emplace_back(n + r, v);
      }
      if (!col.empty()) S.set_bracket(i, n + j, col);
    }
  S.require_valid("semidirect");
  return S;
}

}  // namespace zpd
