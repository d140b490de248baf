#include <doctest.h>

#include <random>

#include "soergel/laurent.hpp"
#include "soergel/multipoly.hpp"
#include "soergel/qmatrix.hpp"

using namespace soergel;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-9, 9);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-5, 5), c(-4, 4), n(0, 5);
  LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p.add_term(e(rng), Rational(c(rng), 1 + (c(rng) + 4) % 3));
  return p;
}

MultiPoly random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), n(0, 4);
  MultiPoly p(nvars);
  for (int k = n(rng); k > 0; --k) {
    Exponent ex(static_cast<std::size_t>(nvars));
    for (int& a : ex) a = e(rng);
    p.add_term(ex, c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational normalizes and overflows into gmp") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  Rational big(1LL << 62);
  Rational sq = big * big;
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  CHECK((sq / big) == big);
  CHECK((sq - sq).is_zero());
  Rational acc(0);
  Rational::fused_add_mul(acc, Rational(2, 3), Rational(3, 4));
  CHECK(acc == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rref examples") {
  auto id = rref(QMatrix::identity(2));
  CHECK(id.reduced == QMatrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  auto r = rref(QMatrix::from_rows({{1, 2}, {2, 4}}));
  CHECK(r.reduced == QMatrix::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);

  auto e = rref(QMatrix(0, 0));
  CHECK(e.rank == 0);
  CHECK(e.reduced.rows() == 0);
}

TEST_CASE("kernel and solve examples") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  auto k = kernel_basis(QMatrix::from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
  CHECK(kernel_basis(QMatrix(2, 2)).size() == 2);

  QVector b{3, 5, 7};
  CHECK(solve(QMatrix::identity(3), b) == b);
  auto x = solve(QMatrix::from_rows({{1, 1}}), QVector{3});
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] == Rational(3));
  CHECK(!solve(QMatrix::from_rows({{1}, {1}}), QVector{0, 1}));
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (int t = 0; t < 200; ++t) {
    QMatrix m = random_matrix(rng, dim(rng), dim(rng));
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    auto ker = kernel_basis(m);
    CHECK(r.rank + ker.size() == m.cols());
    for (const QVector& v : ker) CHECK(is_zero(m * v));
  }
}

TEST_CASE("inverse and row space") {
  QMatrix m = QMatrix::from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == QMatrix::identity(2));
  CHECK(!inverse(QMatrix::from_rows({{1, 2}, {2, 4}})));

  RowSpace rs(3);
  CHECK(rs.insert({1, 2, 3}));
  CHECK(!rs.insert({2, 4, 6}));
  CHECK(rs.contains({-1, -2, -3}));
  CHECK(!rs.contains({0, 0, 1}));
}

TEST_CASE("laurent bar and formatting") {
  CHECK(laurent_bar(LaurentPoly::v()) == LaurentPoly::monomial(-1));
  LaurentPoly sym = LaurentPoly::v() + LaurentPoly::monomial(-1);
  CHECK(laurent_bar(sym) == sym);
  CHECK(sym.to_string() == "v^-1+v");
  LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly(1);
  CHECK(laurent_bar(p) == LaurentPoly::monomial(-3, 2) + LaurentPoly(1));
  CHECK(LaurentPoly::parse("v^-1+2v^3").to_string() == "v^-1+2v^3");
  CHECK(LaurentPoly().to_string() == "0");

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly q = random_laurent(rng);
    CHECK(laurent_bar(laurent_bar(q)) == q);
    CHECK(LaurentPoly::parse(q.to_string()) == q);
  }
}

TEST_CASE("multipoly ring laws and permutation action") {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    MultiPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  std::vector<int> id{1, 2}, s1{2, 1};
  MultiPoly x1 = MultiPoly::variable(2, 1), x2 = MultiPoly::variable(2, 2);
  CHECK(multipoly_perm_act(id, x1 * x1 + x2) == x1 * x1 + x2);
  CHECK(multipoly_perm_act(s1, x1) == x2);
  CHECK(multipoly_perm_act(s1, x1 * x2) == x1 * x2);

  // (vw).p = v.(w.p)
  std::vector<int> v{2, 3, 1}, w{3, 1, 2}, vw(3);
  for (std::size_t i = 0; i < 3; ++i) vw[i] = v[static_cast<std::size_t>(w[i] - 1)];
  for (int t = 0; t < 20; ++t) {
    MultiPoly p = random_poly(rng, 3);
    CHECK(multipoly_perm_act(vw, p) == multipoly_perm_act(v, multipoly_perm_act(w, p)));
  }
  CHECK((Rational(-1, 2) * x1 + 3 * x1 * x1 * x2).to_string() == "3*x1^2*x2 - 1/2*x1");
}
