#include "zpd/builtins.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

namespace zpd::builtins {
namespace {

Scalar scalar_from_mpz(const Field& f, const mpz_class& z) {
  if (f.is_rational()) return Scalar::parse(f, z.get_str());
  mpz_class r = z % f.p;
  if (r < 0) r += f.p;
  return Scalar::from_int(f, r.get_si());
}

mpz_class factorial(std::size_t n) {
  mpz_class r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_index(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::unknown_builtin, std::string(what) + ": malformed number \"" + s + "\"");
  return static_cast<std::size_t>(std::stoull(s));
}

// ---------------------------------------------------------------- families

PairFamily constant_pair(std::string name, Vec x, Vec y) {
  PairFamily fam;
  fam.name = std::move(name);
  fam.x.coeff = {std::move(x)};
  fam.y.coeff = {std::move(y)};
  return fam;
}

/// Module family with x(λ) in algebra coordinates and v(λ) in module ones.
std::vector<PairFamily> vm_families(const Field& f, std::size_t m) {
  std::vector<PairFamily> fams;
  const std::size_t d = m + 1;
  // x(λ) = F + λH - λ²E solves x v = 0 with v(λ) = Σ (m!/i!) λ^{m-i} v_i
  {
    PairFamily a;
    a.name = "vm-lowering";
    a.x.coeff = {unit_vec(f, 3, 2), unit_vec(f, 3, 1),
                 scale(-Scalar::one(f), unit_vec(f, 3, 0))};
    a.y.coeff.assign(m + 1, zero_vec(f, d));
    for (std::size_t i = 0; i <= m; ++i)
      a.y.coeff[m - i][i] = scalar_from_mpz(f, factorial(m) / factorial(i));
    fams.push_back(std::move(a));
  }
  fams.push_back(constant_pair("vm-highest", unit_vec(f, 3, 0), unit_vec(f, d, 0)));
  if (m % 2 == 0 && m > 0) {
    const std::size_t k = m / 2;
    // x(λ) = H + 2λF with v(λ) = Σ (k!/i!) λ^i v_{k+i}
    PairFamily b;
    b.name = "vm-weight-down";
    b.x.coeff = {unit_vec(f, 3, 1), scale(Scalar::from_int(f, 2), unit_vec(f, 3, 2))};
    b.y.coeff.assign(k + 1, zero_vec(f, d));
    for (std::size_t i = 0; i <= k; ++i)
      b.y.coeff[i][k + i] = scalar_from_mpz(f, factorial(k) / factorial(i));
    fams.push_back(std::move(b));
    // x(λ) = H - 2λE with v(λ) = Σ ((k+i)!/(i!(k-i)!)) λ^i v_{k-i}
    PairFamily c;
    c.name = "vm-weight-up";
    c.x.coeff = {unit_vec(f, 3, 1), scale(Scalar::from_int(f, -2), unit_vec(f, 3, 0))};
    c.y.coeff.assign(k + 1, zero_vec(f, d));
    for (std::size_t i = 0; i <= k; ++i)
      c.y.coeff[i][k - i] =
          scalar_from_mpz(f, factorial(k + i) / (factorial(i) * factorial(k - i)));
    fams.push_back(std::move(c));
  }
  return fams;
}

/// Families for V(m) over b = span{H, E} (coordinates H, E).
std::vector<PairFamily> vm_borel_families(const Field& f, std::size_t m) {
  std::vector<PairFamily> fams;
  const std::size_t d = m + 1;
  fams.push_back(constant_pair("b-highest", unit_vec(f, 2, 1), unit_vec(f, d, 0)));
  if (m % 2 == 0 && m > 0) {
    const std::size_t k = m / 2;
    PairFamily c;
    c.name = "b-weight-up";
    c.x.coeff = {unit_vec(f, 2, 0), scale(Scalar::from_int(f, -2), unit_vec(f, 2, 1))};
    c.y.coeff.assign(k + 1, zero_vec(f, d));
    for (std::size_t i = 0; i <= k; ++i)
      c.y.coeff[i][k - i] =
          scalar_from_mpz(f, factorial(k + i) / (factorial(i) * factorial(k - i)));
    fams.push_back(std::move(c));
  }
  return fams;
}

/// Embeds a module family of an n-dim algebra acting on a d-dim module into
/// the semidirect product's n+d coordinates.
PairFamily lift_module_family(const PairFamily& fam, const Field& f, std::size_t n,
                              std::size_t d) {
  PairFamily out;
  out.name = fam.name;
  for (const auto& c : fam.x.coeff) {
    Vec v = zero_vec(f, n + d);
    for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
    out.x.coeff.push_back(std::move(v));
  }
  for (const auto& c : fam.y.coeff) {
    Vec v = zero_vec(f, n + d);
    for (std::size_t j = 0; j < d; ++j) v[n + j] = c[j];
    out.y.coeff.push_back(std::move(v));
  }
  return out;
}

std::vector<PairFamily> semidirect_families(const Field& f, std::size_t n, std::size_t d,
                                            const std::vector<PairFamily>& module_fams,
                                            const std::vector<PairFamily>& algebra_fams) {
  std::vector<PairFamily> out;
  for (const auto& fam : algebra_fams) {
    // K_L families live in the first n coordinates on both sides
    PairFamily lifted;
    lifted.name = fam.name;
    for (const auto& c : fam.x.coeff) {
      Vec v = zero_vec(f, n + d);
      for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
      lifted.x.coeff.push_back(std::move(v));
    }
    for (const auto& c : fam.y.coeff) {
      Vec v = zero_vec(f, n + d);
      for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
      lifted.y.coeff.push_back(std::move(v));
    }
    out.push_back(std::move(lifted));
  }
  for (const auto& fam : module_fams) out.push_back(lift_module_family(fam, f, n, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      out.push_back(constant_pair("ideal-pair", unit_vec(f, n + d, n + i),
                                  unit_vec(f, n + d, n + j)));
  return out;
}

std::vector<PairFamily> heisenberg_families(const Field& f, std::size_t k) {
  std::vector<PairFamily> out;
  const std::size_t n = 2 * k + 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      Vec x = unit_vec(f, n, i);
      x[j] = Scalar::one(f);
      Vec y = unit_vec(f, n, k + i);
      y[k + j] = -Scalar::one(f);
      out.push_back(constant_pair("heisenberg-difference", std::move(x), std::move(y)));
    }
  return out;
}

std::vector<PairFamily> current_families(const Field& f, std::size_t n,
                                         const CommAlgebra& A,
                                         const std::vector<PairFamily>& inner_fams) {
  std::vector<PairFamily> out;
  const std::size_t d = A.dim();
  auto flat = [d](std::size_t i, std::size_t s) { return i * d + s; };
  // (x⊗1 + y⊗a2) and (x⊗a1 + y⊗a1a2) commute for every choice
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t s1 = 0; s1 < d; ++s1)
        for (std::size_t s2 = 0; s2 < d; ++s2) {
          Vec lhs = zero_vec(f, n * d);
          lhs[flat(x, A.unit_index())] += Scalar::one(f);
          lhs[flat(y, s2)] += Scalar::one(f);
          Vec rhs = zero_vec(f, n * d);
          rhs[flat(x, s1)] += Scalar::one(f);
          const Vec& prod = A.product_basis(s1, s2);
          for (std::size_t s = 0; s < d; ++s)
            if (!prod[s].is_zero()) rhs[flat(y, s)] += prod[s];
          if (is_zero_vec(lhs) || is_zero_vec(rhs)) continue;
          out.push_back(constant_pair("tensor-shear", std::move(lhs), std::move(rhs)));
        }
  // inner algebra families lift along e_i -> e_i ⊗ 1
  for (const auto& fam : inner_fams) {
    PairFamily lifted;
    lifted.name = fam.name + ".t0";
    auto lift = [&](const PolyVec& p) {
      PolyVec q;
      for (const auto& c : p.coeff) {
        Vec v = zero_vec(f, n * d);
        for (std::size_t i = 0; i < n; ++i) v[flat(i, A.unit_index())] = c[i];
        q.coeff.push_back(std::move(v));
      }
      return q;
    };
    lifted.x = lift(fam.x);
    lifted.y = lift(fam.y);
    out.push_back(std::move(lifted));
  }
  return out;
}

// quantum-plane lattice basis: total degree ascending, then first exponent
// descending, so N=1 lists t^(0,0), t^(1,0), t^(0,1)
struct QPlaneBasis {
  std::size_t N;
  std::vector<std::pair<std::size_t, std::size_t>> points;
  std::vector<std::vector<std::size_t>> index;  // index[a][b]

  explicit QPlaneBasis(std::size_t n) : N(n), index(n + 1, std::vector<std::size_t>(n + 1, SIZE_MAX)) {
    for (std::size_t deg = 0; deg <= N; ++deg)
      for (std::size_t a = deg + 1; a-- > 0;) {
        index[a][deg - a] = points.size();
        points.emplace_back(a, deg - a);
      }
  }
  std::size_t dim() const { return points.size(); }
};

Scalar scalar_pow(const Scalar& q, std::size_t e) {
  Scalar r = Scalar::one(q.field());
  for (std::size_t i = 0; i < e; ++i) r = r * q;
  return r;
}

std::vector<PairFamily> qplane_families(const Field& f, const Scalar& q, std::size_t N) {
  QPlaneBasis basis(N);
  const std::size_t dim = basis.dim();
  // truncated associative product on coordinates
  auto mono_mul = [&](std::size_t s, std::size_t t) -> std::pair<std::size_t, Scalar> {
    auto [a1, b1] = basis.points[s];
    auto [a2, b2] = basis.points[t];
    if (a1 + b1 + a2 + b2 > N) return {SIZE_MAX, Scalar::zero(f)};
    return {basis.index[a1 + a2][b1 + b2], scalar_pow(q, b1 * a2)};
  };
  auto vec_mul = [&](const Vec& u, const Vec& w) {
    Vec out = zero_vec(f, dim);
    for (std::size_t s = 0; s < dim; ++s) {
      if (u[s].is_zero()) continue;
      for (std::size_t t = 0; t < dim; ++t) {
        if (w[t].is_zero()) continue;
        auto [idx, c] = mono_mul(s, t);
        if (idx != SIZE_MAX) out[idx] += u[s] * w[t] * c;
      }
    }
    return out;
  };
  auto poly_mul = [&](const PolyVec& u, const PolyVec& w) {
    PolyVec out;
    out.coeff.assign(u.coeff.size() + w.coeff.size() - 1, zero_vec(f, dim));
    for (std::size_t a = 0; a < u.coeff.size(); ++a)
      for (std::size_t b = 0; b < w.coeff.size(); ++b)
        out.coeff[a + b] = add(out.coeff[a + b], vec_mul(u.coeff[a], w.coeff[b]));
    return out;
  };

  std::vector<PairFamily> fams;
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      if (s == t) continue;
      PolyVec x;
      x.coeff = {unit_vec(f, dim, t), unit_vec(f, dim, s)};  // t^n + λ t^m
      PolyVec pw = x;
      for (std::size_t k = 2; k <= N; ++k) {
        pw = poly_mul(pw, x);
        bool zero = true;
        for (const auto& c : pw.coeff) zero = zero && is_zero_vec(c);
        if (zero) break;
        PairFamily fam;
        fam.name = "qplane-power";
        fam.x = x;
        fam.y = pw;
        fams.push_back(std::move(fam));
      }
    }
  return fams;
}

}  // namespace

LieAlgebra sl2(const Field& f) {
  LieAlgebra L(f, 3, {"E", "H", "F"});
  L.set_bracket(0, 1, {{0, Scalar::from_int(f, -2)}});  // [E,H] = -2E
  L.set_bracket(0, 2, {{1, Scalar::one(f)}});           // [E,F] = H
  L.set_bracket(1, 2, {{2, Scalar::from_int(f, -2)}});  // [H,F] = -2F
  L.require_valid("sl2");
  return L;
}

LieAlgebra heisenberg(const Field& f, std::size_t k) {
  if (k < 1) fail(errc::input, "heisenberg requires k >= 1");
  const std::size_t n = 2 * k + 1;
  std::vector<std::string> names{"c"};
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x-" + std::to_string(i));
  LieAlgebra L(f, n, std::move(names));
  for (std::size_t i = 1; i <= k; ++i)
    L.set_bracket(i, k + i, {{0, Scalar::one(f)}});  // [x_i, x_{-i}] = c
  L.require_valid("heisenberg");
  return L;
}

LieModule vm_module(const Field& f, std::size_t m) {
  const std::size_t d = m + 1;
  Matrix rhoE(f, d, d), rhoH(f, d, d), rhoF(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    rhoH.at(i, i) = Scalar::from_int(f, static_cast<long long>(m) - 2 * static_cast<long long>(i));
    if (i + 1 < d) rhoF.at(i + 1, i) = Scalar::one(f);
    if (i >= 1)
      rhoE.at(i - 1, i) =
          Scalar::from_int(f, static_cast<long long>(i) * (static_cast<long long>(m) + 1 - static_cast<long long>(i)));
  }
  LieModule M(sl2(f), {rhoE, rhoH, rhoF});
  M.require_valid("vm_module");
  return M;
}

LieAlgebra borel(const Field& f) {
  LieAlgebra L(f, 2, {"H", "E"});
  L.set_bracket(0, 1, {{1, Scalar::from_int(f, 2)}});  // [H,E] = 2E
  L.require_valid("borel");
  return L;
}

LieModule vm_borel_module(const Field& f, std::size_t m) {
  LieModule full = vm_module(f, m);
  LieModule M(borel(f), {full.rho()[1], full.rho()[0]});  // actions of H, E
  M.require_valid("vm_borel_module");
  return M;
}

LieAlgebra galilei(const Field& f, std::size_t m) { return semidirect(vm_module(f, m)); }

LieAlgebra bm_algebra(const Field& f, std::size_t m) {
  return semidirect(vm_borel_module(f, m));
}

LieAlgebra age1(const Field& f) {
  LieAlgebra L(f, 4, {"H", "E", "u", "v"});
  L.set_bracket(0, 1, {{1, Scalar::from_int(f, 2)}});   // [H,E] = 2E
  L.set_bracket(0, 2, {{2, Scalar::one(f)}});           // [H,u] = u
  L.set_bracket(0, 3, {{3, Scalar::from_int(f, -1)}});  // [H,v] = -v
  L.set_bracket(1, 3, {{2, Scalar::one(f)}});           // [E,v] = u
  L.require_valid("age1");
  return L;
}

LieAlgebra dim3_family(const Field& f, int case_no, const std::vector<Scalar>& params) {
  switch (case_no) {
    case 1:
      if (!params.empty()) fail(errc::input, "dim3 case 1 takes no parameters");
      return sl2(f);
    case 2: {
      if (params.size() != 2) fail(errc::input, "dim3 case 2 takes parameters a,b");
      LieAlgebra L(f, 3, {"x", "y", "z"});
      // [z,x] = y, [z,y] = a x + b y
      L.set_bracket(0, 2, {{1, Scalar::from_int(f, -1)}});
      L.set_bracket(1, 2, {{0, -params[0]}, {1, -params[1]}});
      L.require_valid("dim3 case 2");
      return L;
    }
    case 3: {
      if (params.size() != 3) fail(errc::input, "dim3 case 3 takes parameters a,b,c");
      LieAlgebra L(f, 3, {"u", "v", "w"});
      L.set_bracket(0, 1, {{2, params[0]}});
      L.set_bracket(0, 2, {{2, params[1]}});
      L.set_bracket(1, 2, {{2, params[2]}});
      L.require_valid("dim3 case 3");
      return L;
    }
    default:
      fail(errc::input, "dim3 case must be 1, 2 or 3");
  }
}

LieAlgebra truncated_current(const LieAlgebra& L, std::size_t N) {
  return tensor_with_comm(L, CommAlgebra::truncated_poly(L.field(), N));
}

LieAlgebra truncated_quantum_plane(const Field& f, const Scalar& q, std::size_t N) {
  if (N < 1) fail(errc::input, "qplane requires N >= 1");
  if (f.is_prime())
    fail(errc::input, "qplane is defined over Q only (every GF(p) scalar is a root of unity)");
  if (q.is_zero() || q.is_one() || (-q).is_one())
    fail(errc::input, "qplane requires q not in {0, 1, -1}");
  QPlaneBasis basis(N);
  const std::size_t dim = basis.dim();
  std::vector<std::string> names;
  for (auto [a, b] : basis.points)
    names.push_back("t(" + std::to_string(a) + "," + std::to_string(b) + ")");
  LieAlgebra L(f, dim, std::move(names));
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = s + 1; t < dim; ++t) {
      auto [a1, b1] = basis.points[s];
      auto [a2, b2] = basis.points[t];
      if (a1 + b1 + a2 + b2 > N) continue;
      Scalar c = scalar_pow(q, b1 * a2) - scalar_pow(q, b2 * a1);
      if (c.is_zero()) continue;
      L.set_bracket(s, t, {{basis.index[a1 + a2][b1 + b2], c}});
    }
  L.require_valid("qplane");
  return L;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"sl2", "3-dimensional simple algebra, basis (E,H,F)", "zpd"},
      {"heisenberg:k", "Heisenberg algebra of dimension 2k+1", "zpd"},
      {"vm:m", "simple sl2-module V(m) of dimension m+1", "zad iff m = 1 or m even"},
      {"galilei:m", "sl2 ⋉ V(m), dimension m+4", "zpd iff m = 1 or m even"},
      {"borel", "2-dimensional nonabelian algebra, basis (H,E)", "zpd"},
      {"bm:m", "b ⋉ V(m), dimension m+3", "zpd iff m = 2"},
      {"age1", "centerless aging algebra, dimension 4", "not zpd"},
      {"dim3:case:params", "3-dimensional classification grid", "zpd"},
      {"current:<builtin>:N", "L ⊗ F[t]/(t^N)", "zpd when the base is zpd"},
      {"qplane:q:N", "truncated quantum-plane quotient (exploratory)", "-"},
  };
  return entries;
}

ParsedBuiltin parse(const Field& f, const std::string& ref) {
  auto tok = split(ref, ':');
  const std::string& head = tok[0];
  auto need = [&](std::size_t n) {
    if (tok.size() != n) fail(errc::unknown_builtin, "malformed builtin reference \"" + ref + "\"");
  };
  if (head == "sl2") {
    need(1);
    return {sl2(f), "sl2", true, {}};
  }
  if (head == "heisenberg") {
    need(2);
    std::size_t k = parse_index(tok[1], "heisenberg");
    return {heisenberg(f, k), ref, true, heisenberg_families(f, k)};
  }
  if (head == "vm") {
    need(2);
    std::size_t m = parse_index(tok[1], "vm");
    return {vm_module(f, m), ref, m == 1 || m % 2 == 0, vm_families(f, m)};
  }
  if (head == "borel") {
    need(1);
    return {borel(f), "borel", true, {}};
  }
  if (head == "galilei") {
    need(2);
    std::size_t m = parse_index(tok[1], "galilei");
    return {galilei(f, m), ref, m == 1 || m % 2 == 0,
            semidirect_families(f, 3, m + 1, vm_families(f, m), {})};
  }
  if (head == "bm") {
    need(2);
    std::size_t m = parse_index(tok[1], "bm");
    return {bm_algebra(f, m), ref, m == 2,
            semidirect_families(f, 2, m + 1, vm_borel_families(f, m), {})};
  }
  if (head == "age1") {
    need(1);
    std::vector<PairFamily> fams;
    fams.push_back(constant_pair("age-highest", unit_vec(f, 4, 1), unit_vec(f, 4, 2)));
    fams.push_back(constant_pair("ideal-pair", unit_vec(f, 4, 2), unit_vec(f, 4, 3)));
    return {age1(f), "age1", false, std::move(fams)};
  }
  if (head == "dim3") {
    if (tok.size() < 2) fail(errc::unknown_builtin, "dim3 needs a case number");
    int case_no = static_cast<int>(parse_index(tok[1], "dim3"));
    std::vector<Scalar> params;
    if (tok.size() == 3 && !tok[2].empty())
      for (const auto& p : split(tok[2], ',')) params.push_back(Scalar::parse(f, p));
    else if (tok.size() > 3)
      fail(errc::unknown_builtin, "malformed builtin reference \"" + ref + "\"");
    return {dim3_family(f, case_no, params), ref, true, {}};
  }
  if (head == "current") {
    if (tok.size() < 3) fail(errc::unknown_builtin, "current needs a base builtin and N");
    std::size_t N = parse_index(tok.back(), "current");
    std::string inner_ref;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i)
      inner_ref += (i > 1 ? ":" : "") + tok[i];
    ParsedBuiltin inner = parse(f, inner_ref);
    auto* L = std::get_if<LieAlgebra>(&inner.value);
    if (L == nullptr) fail(errc::input, "current base must be a Lie algebra");
    CommAlgebra A = CommAlgebra::truncated_poly(f, N);
    LieAlgebra T = tensor_with_comm(*L, A);
    std::optional<bool> expected;
    if (inner.expected_positive.has_value() && *inner.expected_positive) expected = true;
    auto fams = current_families(f, L->dim(), A, inner.families);
    return {std::move(T), ref, expected, std::move(fams)};
  }
  if (head == "qplane") {
    need(3);
    Scalar q = Scalar::parse(f, tok[1]);
    std::size_t N = parse_index(tok[2], "qplane");
    return {truncated_quantum_plane(f, q, N), ref, std::nullopt, qplane_families(f, q, N)};
  }
  fail(errc::unknown_builtin, "unknown builtin \"" + ref + "\"");
}

std::vector<PairFamily> families_for_algebra(const Field& f, const std::string& ref) {
  ParsedBuiltin b = parse(f, ref);
  if (!std::holds_alternative<LieAlgebra>(b.value))
    fail(errc::input, "\"" + ref + "\" is a module, not an algebra");
  return std::move(b.families);
}

std::vector<PairFamily> families_for_module(const Field& f, const std::string& ref) {
  ParsedBuiltin b = parse(f, ref);
  if (!std::holds_alternative<LieModule>(b.value))
    fail(errc::input, "\"" + ref + "\" is an algebra, not a module");
  return std::move(b.families);
}

}  // namespace zpd::builtins
