#include <doctest.h>

#include "soergel/tate.hpp"

using namespace soergel;
using namespace soergel::tate;

namespace {

UngradedComplex two_term(std::size_t a, std::size_t b, const QMatrix& d) {
  UngradedComplex x;
  x.dims = {{0, a}, {1, b}};
  x.d = {{0, d}};
  return x;
}

}  // namespace

TEST_CASE("simples and weights") {
  BigradedComplex q = simple(0, 0);
  CHECK(q.dim(0, 0) == 1);
  CHECK(simple(-2, -1).dim(-2, -1) == 1);
  // Q(p) sits in internal degree -p.
  CHECK(twist_shift(simple(0, 0), 3, 0) == simple(0, -3));
  CHECK(twist_shift(simple(0, 0), 1, 2) == simple(-2, -1));
  CHECK(weight_of(0, 0) == 0);
  for (int p = -3; p <= 3; ++p) CHECK(weight_of(-2 * p, -p) == 0);
  CHECK(weight_of(0, -1) == 2);
}

TEST_CASE("collapse") {
  UngradedComplex q0;
  q0.dims[0] = 1;
  CHECK(iota_collapse(simple(-2, -1)) == q0);
  CHECK(iota_collapse(simple(0, 0)) == q0);
  for (int p = 1; p <= 3; ++p) {
    UngradedComplex e;
    e.dims[2 * p] = 1;
    CHECK(iota_collapse(simple(0, -p)) == e);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    BigradedComplex x = random_complex(rng), y = random_complex(rng);
    REQUIRE(x.dsquare_zero());
    UngradedComplex ix = iota_collapse(x);
    CHECK(ix.dsquare_zero());
    CHECK(minimize(ix) == iota_collapse(minimize(x)));
    CHECK(minimize(iota_collapse(direct_sum(x, y))) == minimize(direct_sum(ix, iota_collapse(y))));
    CHECK(iota_collapse(shift(x, 1)) == shift(ix, 1));
  }
}

TEST_CASE("minimize") {
  auto contractible = two_term(1, 1, QMatrix::identity(1));
  CHECK(minimize(contractible).is_zero());
  UngradedComplex z;
  z.dims = {{0, 2}, {3, 1}};
  CHECK(minimize(z) == z);
  auto x = two_term(2, 1, QMatrix::from_rows({{1, 1}}));
  UngradedComplex expect;
  expect.dims[0] = 1;
  CHECK(minimize(x) == expect);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    UngradedComplex a = random_ungraded(rng), b = random_ungraded(rng);
    CHECK(minimize(minimize(a)) == minimize(a));
    for (int k = -3; k <= 3; ++k) {
      std::size_t h = hom_homotopy(a, b, k);
      CHECK(h == hom_homotopy(minimize(a), minimize(b), k));
      // Minimal complexes: sum over c of dim H^c(a) dim H^{c+k}(b).
      std::size_t expect_h = 0;
      auto ha = a.cohomology(), hb = b.cohomology();
      for (const auto& [c, n] : ha)
        if (hb.contains(c + k)) expect_h += n * hb.at(c + k);
      CHECK(h == expect_h);
    }
  }
}

TEST_CASE("truncations") {
  CHECK(t_truncate_leq(UngradedComplex{}, 0).is_zero());
  CHECK(w_truncate_leq(BigradedComplex{}, 0).is_zero());
  BigradedComplex x = direct_sum(simple(0, 0), simple(1, 0));
  CHECK(minimize(t_truncate_leq(x, 0)) == simple(0, 0));
  BigradedComplex y = direct_sum(simple(-2, -1), simple(0, 0));
  CHECK(w_truncate_leq(y, -1).is_zero());
  CHECK(weights_leq(y, 0));
  CHECK(weights_geq(y, 0));

  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    UngradedComplex u = minimize(random_ungraded(rng));
    for (int m = -3; m <= 3; ++m) {
      CHECK(t_truncate_leq(u, m).cohomology() == w_truncate_leq(u, m).cohomology());
      CHECK(t_truncate_geq(u, m).cohomology() == w_truncate_geq(u, m).cohomology());
    }
  }
}

TEST_CASE("hom in the homotopy category") {
  BigradedComplex q = simple(0, 0), q1 = simple(0, -1);
  CHECK(hom_homotopy(q, q, 0) == 1);
  for (int k = -3; k <= 3; ++k) CHECK(hom_homotopy(q, q1, k) == 0);
  CHECK(hom_homotopy(iota_collapse(q), iota_collapse(simple(-2, -1)), 0) == 1);
}

TEST_CASE("degrading at a point") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    BigradedComplex x = minimize(random_complex(rng)), y = minimize(random_complex(rng));
    std::size_t total = 0;
    for (int i = -12; i <= 12; ++i) total += hom_homotopy(x, twist_shift(y, i, 2 * i), 0);
    CHECK(hom_homotopy(iota_collapse(x), iota_collapse(y), 0) == total);
  }
}

TEST_CASE("iota is weight exact but not t-exact") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    BigradedComplex x = random_complex(rng);
    UngradedComplex ix = iota_collapse(x);
    CHECK(weights_leq(x, 0) == degrees_leq(ix, 0));
    CHECK(weights_geq(x, 0) == degrees_geq(ix, 0));
  }
  BigradedComplex w = simple(-2, -1);
  CHECK(degrees_leq(w, -2));
  CHECK(!degrees_leq(iota_collapse(w), -2));
  CHECK(degrees_leq(iota_collapse(w), 0));
  CHECK(degrees_geq(iota_collapse(w), 0));
}

TEST_CASE("axioms") {
  std::vector<BigradedComplex> one{simple(0, 0)};
  CHECK(check_t_axioms(one).ok());
  CHECK(check_w_axioms(one).ok());
  std::mt19937_64 rng(99);
  std::vector<BigradedComplex> sample;
  std::vector<UngradedComplex> usample;
  for (int t = 0; t < 12; ++t) {
    sample.push_back(random_complex(rng));
    usample.push_back(random_ungraded(rng));
  }
  auto t = check_t_axioms(sample);
  CHECK(t.ok());
  CHECK(t.checks > 0);
  CHECK(check_w_axioms(sample).ok());
  CHECK(check_t_axioms(usample).ok());
  CHECK(check_w_axioms(usample).ok());
}
