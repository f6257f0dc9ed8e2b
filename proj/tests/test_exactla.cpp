#include <doctest.h>

#include "zpd/rng.hpp"
#include "zpd/subspace.hpp"
#include "zpd/wedge.hpp"

using namespace zpd;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::gf(5);

Matrix make(const Field& f, std::size_t r, std::size_t c,
            std::initializer_list<long long> entries) {
  Matrix m(f, r, c);
  auto it = entries.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::from_int(f, *it++));
  return m;
}

Vec vec(const Field& f, std::initializer_list<long long> entries) {
  Vec v;
  for (auto e : entries) v.push_back(Scalar::from_int(f, e));
  return v;
}

Vec random_vec(const Field& f, std::size_t n, Rng& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(f.is_rational()
                    ? Scalar::from_int(f, rng.boxed(4))
                    : Scalar::from_int(f, static_cast<long long>(rng.below(f.p))));
  return v;
}

}  // namespace

TEST_CASE("rational scalars stay in lowest terms with positive denominator") {
  CHECK(Scalar::rational(3, 6).str() == "1/2");
  CHECK(Scalar::rational(-4, -8).str() == "1/2");
  CHECK(Scalar::rational(4, -8).str() == "-1/2");
  CHECK(Scalar::rational(0, 7).str() == "0");
  CHECK(Scalar::parse(Q, "6/4").str() == "3/2");
  CHECK((Scalar::rational(1, 3) + Scalar::rational(1, 6)).str() == "1/2");
  CHECK((Scalar::rational(2, 3) * Scalar::rational(3, 4)).str() == "1/2");
  CHECK((Scalar::rational(1, 2) / Scalar::rational(1, 4)).str() == "2");
  CHECK_THROWS_AS(Scalar::rational(1, 0), Error);
  CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), Error);
}

TEST_CASE("prime-field scalars reduce mod p and invert by extended Euclid") {
  CHECK(Scalar::from_int(F5, 7).str() == "2");
  CHECK(Scalar::from_int(F5, -1).str() == "4");
  CHECK(Scalar::parse(F5, "13").str() == "3");
  for (std::uint64_t a = 1; a < 7; ++a) CHECK(gfp_inverse(a, 7) * a % 7 == 1);
  CHECK((Scalar::from_int(F5, 3).inverse() * Scalar::from_int(F5, 3)).is_one());
  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), Error);
  CHECK_THROWS_AS(Field::gf(6), Error);
  CHECK_THROWS_AS(Field::gf(1), Error);
}

TEST_CASE("mixed field tags are an input error") {
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F5), Error);
  Matrix m(Q, 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Scalar::one(F5)), Error);
}

TEST_CASE("rref on hand-reduced matrices") {
  auto [id, piv_id] = rref(Matrix::identity(Q, 2));
  CHECK(id == Matrix::identity(Q, 2));
  CHECK(piv_id == std::vector<std::size_t>{0, 1});

  auto [z, piv_z] = rref(Matrix(Q, 3, 3));
  CHECK(z.is_zero());
  CHECK(piv_z.empty());

  auto [r, piv] = rref(make(Q, 2, 2, {2, 4, 1, 2}));
  CHECK(r == make(Q, 2, 2, {1, 2, 0, 0}));
  CHECK(piv == std::vector<std::size_t>{0});
}

TEST_CASE("kernel_basis on hand-solved systems") {
  CHECK(kernel_basis(Matrix::identity(Q, 4)).dim() == 0);
  CHECK(kernel_basis(Matrix(Q, 2, 3)).dim() == 3);

  Subspace k = kernel_basis(make(Q, 1, 2, {1, 2}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0][0] == Scalar::one(Q));
  CHECK(k.basis()[0][1] == Scalar::rational(-1, 2));
}

TEST_CASE("span_insert basic behavior") {
  Subspace s(Q, 3);
  CHECK_FALSE(s.insert(zero_vec(Q, 3)));
  CHECK(s.insert(unit_vec(Q, 3, 0)));
  CHECK(s.dim() == 1);

  Subspace t(Q, 2);
  CHECK(t.insert(vec(Q, {1, 1})));
  CHECK_FALSE(t.insert(vec(Q, {2, 2})));
  CHECK(t.dim() == 1);

  CHECK_THROWS_AS(s.insert(vec(Q, {1, 1})), Error);  // length mismatch
}

TEST_CASE("annihilator on hand-solved systems") {
  CHECK(Subspace::full(Q, 3).annihilator().dim() == 0);
  CHECK(Subspace::zero(Q, 3).annihilator().dim() == 3);

  Subspace s(Q, 3);
  s.insert(vec(Q, {1, 0, 1}));
  Subspace ann = s.annihilator();
  CHECK(ann.dim() == 2);
  CHECK(ann.contains(vec(Q, {0, 1, 0})));
  CHECK(ann.contains(vec(Q, {1, 0, -1})));
}

TEST_CASE("wedge coordinates: flat indexing and basic identities") {
  WedgeIndex w(3);
  CHECK(w.dim() == 3);
  CHECK(w.flat(0, 1) == 0);
  CHECK(w.flat(0, 2) == 1);
  CHECK(w.flat(1, 2) == 2);
  for (std::size_t t = 0; t < w.dim(); ++t) {
    auto [i, j] = w.unflat(t);
    CHECK(w.flat(i, j) == t);
  }

  Vec x = vec(Q, {1, 2, 3});
  CHECK(is_zero_vec(wedge_coords(x, x, w)));

  Vec e01 = wedge_coords(unit_vec(Q, 3, 0), unit_vec(Q, 3, 1), w);
  CHECK(e01 == vec(Q, {1, 0, 0}));

  CHECK_THROWS_AS(wedge_coords(vec(Q, {1, 2}), x, w), Error);
}

TEST_CASE("rank-nullity holds on random matrices over Q and GF(5)") {
  Rng rng(2024);
  for (const Field& f : {Q, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m.set(i, j, f.is_rational()
                          ? Scalar::from_int(f, rng.boxed(3))
                          : Scalar::from_int(f, static_cast<long long>(rng.below(f.p))));
      CHECK(rank(m) + kernel_basis(m).dim() == c);
    }
  }
}

TEST_CASE("span_insert is idempotent on vectors already in the span") {
  Rng rng(7);
  for (const Field& f : {Q, F5}) {
    Subspace s(f, 5);
    std::vector<Vec> inserted;
    for (int k = 0; k < 8; ++k) {
      Vec v = random_vec(f, 5, rng);
      s.insert(v);
      inserted.push_back(v);
    }
    std::size_t d = s.dim();
    for (const auto& v : inserted) CHECK_FALSE(s.insert(v));
    CHECK(s.dim() == d);
  }
}

TEST_CASE("annihilator is an involution on subspaces") {
  Rng rng(99);
  for (const Field& f : {Q, F5}) {
    for (int trial = 0; trial < 12; ++trial) {
      Subspace s(f, 6);
      std::size_t k = rng.below(5);
      for (std::size_t i = 0; i < k; ++i) s.insert(random_vec(f, 6, rng));
      CHECK(s.annihilator().annihilator() == s);
    }
  }
}

TEST_CASE("wedge_coords is bilinear and alternating on random triples") {
  Rng rng(5);
  WedgeIndex w(4);
  for (const Field& f : {Q, F5}) {
    for (int trial = 0; trial < 12; ++trial) {
      Vec x = random_vec(f, 4, rng), y = random_vec(f, 4, rng), z = random_vec(f, 4, rng);
      Scalar a = Scalar::from_int(f, rng.boxed(3));
      CHECK(wedge_coords(x, y, w) == scale(-Scalar::one(f), wedge_coords(y, x, w)));
      CHECK(wedge_coords(add(scale(a, x), z), y, w) ==
            add(scale(a, wedge_coords(x, y, w)), wedge_coords(z, y, w)));
      CHECK(is_zero_vec(wedge_coords(x, x, w)));
    }
  }
}

TEST_CASE("subspace intersection, sum and coordinates") {
  Subspace a(Q, 3), b(Q, 3);
  a.insert(vec(Q, {1, 0, 0}));
  a.insert(vec(Q, {0, 1, 0}));
  b.insert(vec(Q, {0, 1, 0}));
  b.insert(vec(Q, {0, 0, 1}));
  Subspace cap = a.intersect(b);
  CHECK(cap.dim() == 1);
  CHECK(cap.contains(vec(Q, {0, 1, 0})));
  CHECK(a.sum(b) == Subspace::full(Q, 3));

  Vec coords = a.coordinates_of(vec(Q, {3, -2, 0}));
  CHECK(coords == vec(Q, {3, -2}));
  CHECK_THROWS_AS(a.coordinates_of(vec(Q, {0, 0, 1})), Error);
}
