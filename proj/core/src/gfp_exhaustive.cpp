#include "zpd/gfp_exhaustive.hpp"

namespace zpd {
namespace {

using RawVec = std::vector<std::uint32_t>;
using RawMat = std::vector<std::uint32_t>;  // row-major, fixed shape per engine

// Incremental RREF span over GF(p) on unboxed vectors.
struct RawSpan {
  std::uint32_t p;
  std::size_t w;
  std::vector<RawVec> rows;
  std::vector<std::size_t> piv;

  RawSpan(std::uint32_t p_, std::size_t w_) : p(p_), w(w_) {}

  bool insert(RawVec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t lead = v[piv[r]];
      if (lead) {
        const std::uint64_t f = p - lead;  // v += f * row
        const RawVec& row = rows[r];
        for (std::size_t c = piv[r]; c < w; ++c)
          if (row[c]) v[c] = static_cast<std::uint32_t>((v[c] + f * row[c]) % p);
      }
    }
    std::size_t lead = w;
    for (std::size_t c = 0; c < w; ++c)
      if (v[c]) { lead = c; break; }
    if (lead == w) return false;
    const std::uint64_t inv = gfp_inverse(v[lead], p);
    for (std::size_t c = lead; c < w; ++c)
      if (v[c]) v[c] = static_cast<std::uint32_t>(v[c] * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t f0 = rows[r][lead];
      if (f0) {
        const std::uint64_t f = p - f0;
        for (std::size_t c = lead; c < w; ++c)
          if (v[c]) rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + f * v[c]) % p);
      }
    }
    std::size_t pos = 0;
    while (pos < piv.size() && piv[pos] < lead) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    piv.insert(piv.begin() + pos, lead);
    return true;
  }

  std::size_t dim() const { return rows.size(); }
};

// Kernel basis of an nr x nc matrix mod p; work is destroyed.
void raw_kernel(RawMat& work, std::size_t nr, std::size_t nc, std::uint32_t p,
                std::vector<RawVec>& out) {
  out.clear();
  std::vector<std::size_t> piv;
  piv.reserve(nc);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t sel = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (work[i * nc + c]) { sel = i; break; }
    if (sel == nr) continue;
    if (sel != r)
      for (std::size_t j = c; j < nc; ++j) std::swap(work[r * nc + j], work[sel * nc + j]);
    const std::uint64_t inv = gfp_inverse(work[r * nc + c], p);
    for (std::size_t j = c; j < nc; ++j)
      if (work[r * nc + j])
        work[r * nc + j] = static_cast<std::uint32_t>(work[r * nc + j] * inv % p);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const std::uint64_t f0 = work[i * nc + c];
      if (f0) {
        const std::uint64_t f = p - f0;
        for (std::size_t j = c; j < nc; ++j)
          if (work[r * nc + j])
            work[i * nc + j] =
                static_cast<std::uint32_t>((work[i * nc + j] + f * work[r * nc + j]) % p);
      }
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(nc, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t fc = 0; fc < nc; ++fc) {
    if (is_piv[fc]) continue;
    RawVec v(nc, 0);
    v[fc] = 1;
    for (std::size_t ri = 0; ri < piv.size(); ++ri) {
      const std::uint32_t a = work[ri * nc + fc];
      if (a) v[piv[ri]] = p - a;
    }
    out.push_back(std::move(v));
  }
}

Vec to_scalars(const RawVec& v, const Field& f) {
  Vec out;
  out.reserve(v.size());
  for (auto r : v) out.push_back(Scalar::from_int(f, static_cast<long long>(r)));
  return out;
}

// Walks one representative per projective line, maintaining M(x) = sum x_i B_i
// incrementally, and hands (x, M) to the visitor. Visitor returns false to stop.
template <class Visit>
std::uint64_t enumerate_lines(std::uint32_t p, std::size_t n,
                              const std::vector<RawMat>& B, std::size_t mat_len,
                              Visit&& visit) {
  std::uint64_t lines = 0;
  std::vector<RawMat> partial(n, RawMat(mat_len, 0));
  std::vector<std::uint32_t> digits(n, 0);
  RawVec x(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    // x = e_lead + sum_{k > lead} digits[k] e_k
    for (std::size_t k = lead; k < n; ++k) partial[k] = B[lead];
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      for (std::size_t k = lead + 1; k < n; ++k) x[k] = digits[k];
      ++lines;
      if (!visit(x, partial[n - 1])) return lines;
      // odometer over digits[lead+1 .. n-1], most significant first
      std::size_t k = n;
      while (k-- > lead + 1) {
        if (digits[k] + 1 < p) {
          ++digits[k];
          // partial[k] += B[k]
          RawMat& pk = partial[k];
          const RawMat& bk = B[k];
          const RawMat& prev = k == lead + 1 ? partial[lead] : partial[k - 1];
          if (digits[k] == 1) {
            for (std::size_t t = 0; t < mat_len; ++t) {
              std::uint32_t s = prev[t] + bk[t];
              pk[t] = s >= p ? s - p : s;
            }
          } else {
            for (std::size_t t = 0; t < mat_len; ++t) {
              std::uint32_t s = pk[t] + bk[t];
              pk[t] = s >= p ? s - p : s;
            }
          }
          for (std::size_t m = k + 1; m < n; ++m) {
            digits[m] = 0;
            partial[m] = partial[k];
          }
          break;
        }
        digits[k] = 0;
      }
      if (k < lead + 1) break;  // carried past the top digit
    }
  }
  return lines;
}

std::vector<RawMat> raw_ad_tables(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::uint32_t p = L.field().p;
  std::vector<RawMat> B(n, RawMat(n * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adi = L.ad_matrix(unit_vec(L.field(), n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        B[i][r * n + c] = static_cast<std::uint32_t>(adi.at(r, c).residue() % p);
  }
  return B;
}

void check_budget(const Field& f, std::size_t n, std::uint64_t cap, const char* what) {
  if (!f.is_prime()) fail(errc::input, std::string(what) + ": GF(p) field required");
  if (f.p == 2) fail(errc::unsupported_field, std::string(what) + ": GF(2) refused");
  const std::uint64_t guard = projective_guard(f.p, n);
  if (guard > cap)
    fail(errc::budget_exceeded, std::string(what) + ": p^(n-1) = " + std::to_string(guard) +
                                    " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t projective_guard(std::uint32_t p, std::size_t n) {
  std::uint64_t g = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (g > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    g *= p;
  }
  return g;
}

ExhaustiveSpan exhaustive_kprime_gfp(const LieAlgebra& L, std::uint64_t cap,
                                     std::size_t stop_at_dim) {
  check_budget(L.field(), L.dim(), cap, "exhaustive K'");
  const std::size_t n = L.dim();
  const std::uint32_t p = L.field().p;
  const WedgeIndex w = L.wedge();
  const std::size_t wd = w.dim();
  auto B = raw_ad_tables(L);

  RawSpan span(p, wd);
  std::vector<std::pair<RawVec, RawVec>> contributors;
  RawMat work;
  std::vector<RawVec> ker;
  RawVec wedge(wd, 0);

  std::uint64_t lines = enumerate_lines(p, n, B, n * n, [&](const RawVec& x, const RawMat& M) {
    work = M;
    raw_kernel(work, n, n, p, ker);
    for (const auto& y : ker) {
      std::size_t t = 0;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++t) {
          const std::uint64_t a = static_cast<std::uint64_t>(x[i]) * y[j] % p;
          const std::uint64_t b = static_cast<std::uint64_t>(x[j]) * y[i] % p;
          wedge[t] = static_cast<std::uint32_t>((a + p - b) % p);
          nonzero |= wedge[t] != 0;
        }
      if (nonzero && span.insert(wedge)) {
        contributors.emplace_back(x, y);
        if (span.dim() >= stop_at_dim) return false;
      }
    }
    return true;
  });

  ExhaustiveSpan out{Subspace(L.field(), wd), {}, lines};
  for (const auto& row : span.rows) out.span.insert(to_scalars(row, L.field()));
  for (const auto& [x, y] : contributors)
    out.contributors.push_back({to_scalars(x, L.field()), to_scalars(y, L.field())});
  return out;
}

ExhaustiveSpan exhaustive_kv_gfp(const LieModule& m, std::uint64_t cap,
                                 std::size_t stop_at_dim) {
  check_budget(m.field(), m.algebra().dim(), cap, "exhaustive K_V");
  const std::size_t n = m.algebra().dim(), d = m.mod_dim();
  const std::uint32_t p = m.field().p;
  const std::size_t td = n * d;
  std::vector<RawMat> B(n, RawMat(d * d, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        B[i][r * d + c] = static_cast<std::uint32_t>(m.rho()[i].at(r, c).residue() % p);

  RawSpan span(p, td);
  std::vector<std::pair<RawVec, RawVec>> contributors;
  RawMat work;
  std::vector<RawVec> ker;
  RawVec tensor(td, 0);

  std::uint64_t lines = enumerate_lines(p, n, B, d * d, [&](const RawVec& x, const RawMat& M) {
    work = M;
    raw_kernel(work, d, d, p, ker);
    for (const auto& v : ker) {
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          tensor[i * d + j] = static_cast<std::uint32_t>(
              static_cast<std::uint64_t>(x[i]) * v[j] % p);
          nonzero |= tensor[i * d + j] != 0;
        }
      if (nonzero && span.insert(tensor)) {
        contributors.emplace_back(x, v);
        if (span.dim() >= stop_at_dim) return false;
      }
    }
    return true;
  });

  ExhaustiveSpan out{Subspace(m.field(), td), {}, lines};
  for (const auto& row : span.rows) out.span.insert(to_scalars(row, m.field()));
  for (const auto& [x, v] : contributors)
    out.contributors.push_back({to_scalars(x, m.field()), to_scalars(v, m.field())});
  return out;
}

ProportionalScan proportional_scan_gfp(const LieAlgebra& L, std::uint64_t cap) {
  check_budget(L.field(), L.dim(), cap, "proportional scan");
  const std::size_t n = L.dim();
  const std::uint32_t p = L.field().p;
  auto B = raw_ad_tables(L);

  ProportionalScan result;
  RawMat work;
  std::vector<RawVec> ker;
  result.lines = enumerate_lines(p, n, B, n * n, [&](const RawVec& x, const RawMat& M) {
    work = M;
    raw_kernel(work, n, n, p, ker);
    if (ker.size() <= 1) return true;
    // centralizer has dimension >= 2: pick a kernel vector independent of x
    RawSpan probe(p, n);
    probe.insert(x);
    for (const auto& y : ker) {
      RawVec copy = y;
      if (probe.insert(std::move(copy))) {
        result.proportional = false;
        result.counterexample =
            CommutingPair{to_scalars(x, L.field()), to_scalars(y, L.field())};
        return false;
      }
    }
    return true;
  });
  return result;
}

}  // namespace zpd
