#include <doctest.h>

#include "soergel/formal.hpp"
#include "soergel/tate.hpp"

using namespace soergel;
using namespace soergel::formal;

namespace {

Generator mix(const char* w, int n) { return {WeylElement::parse(w), n}; }
Generator plain(const char* w) { return {WeylElement::parse(w), std::nullopt}; }

// Rank 1 MIX complex as a bigraded complex: (e, n) at position c is Q(n)[2n - c].
tate::BigradedComplex to_tate(const FormalComplex& x) {
  tate::BigradedComplex out;
  std::map<int, std::map<int, std::vector<std::size_t>>> slot;  // n -> c -> generator indices
  for (const auto& [c, t] : x.terms)
    for (std::size_t i = 0; i < t.size(); ++i) slot[*t[i].n][c].push_back(i);
  for (const auto& [n, by_c] : slot) {
    auto& strand = out.strands[-n];
    for (const auto& [c, idx] : by_c) strand.dims[c - 2 * n] = idx.size();
    for (const auto& [c, idx] : by_c) {
      if (!by_c.contains(c + 1) || !x.d.contains(c)) continue;
      const auto& next = by_c.at(c + 1);
      QMatrix m(next.size(), idx.size());
      for (std::size_t r = 0; r < next.size(); ++r)
        for (std::size_t s = 0; s < idx.size(); ++s) {
          const QVector& e = x.d.at(c)[next[r]][idx[s]];
          if (!e.empty()) m(r, s) = e[0];
        }
      strand.d[c - 2 * n] = m;
    }
  }
  return out.normalized();
}

}  // namespace

TEST_CASE("hom_rule examples") {
  FormalCategory f1(1);
  CHECK(f1.hom_rule(Side::kMix, mix("1", 0), mix("1", 0)).size() == 1);
  CHECK(f1.hom_rule(Side::kMix, mix("1", 0), mix("1", 1)).empty());
  FormalCategory f2(2);
  CHECK(f2.hom_rule(Side::kK, plain("21"), plain("21")).size() == 2);
  CHECK(f2.hom_rule(Side::kPerv, plain("21"), plain("21")).size() == 2);
  CHECK_THROWS_AS((void)f2.hom_rule(Side::kK, mix("21", 0), plain("21")), std::invalid_argument);
  // MIX and PERV_GR read the same graded piece.
  for (int n = -2; n <= 2; ++n)
    CHECK(f2.hom_rule(Side::kMix, mix("12", 0), mix("21", n)).size() ==
          f2.hom_rule(Side::kPervGr, mix("12", 0), mix("21", n)).size());
}

TEST_CASE("degrading of Hom spaces in S3") {
  FormalCategory f(3);
  for (const auto& x : f.elements())
    for (const auto& y : f.elements()) {
      std::size_t total = 0;
      for (int n = -4; n <= 4; ++n) total += f.hom_rule(Side::kMix, {x, 0}, {y, n}).size();
      const std::size_t k = f.hom_rule(Side::kK, {x, std::nullopt}, {y, std::nullopt}).size();
      CHECK(k == total);
      CHECK(k == hom_dim_ungraded(f.soergel().indecomposable(x), f.soergel().indecomposable(y)));
    }
}

TEST_CASE("compose and d^2") {
  FormalCategory f(2);
  std::vector<Generator> a{mix("12", 0)}, b{mix("21", 1)};
  const auto& basis = f.hom_rule(Side::kMix, a[0], b[0]);
  REQUIRE(basis.size() == 1);
  EntryMatrix g{{QVector{Rational(3)}}};
  EntryMatrix id{{QVector{Rational(1)}}};
  CHECK(f.compose(Side::kMix, a, b, b, id, g) == g);
  CHECK(f.compose(Side::kMix, a, a, b, g, id) == g);

  FormalComplex zero;
  zero.terms[0] = {mix("12", 0)};
  zero.terms[1] = {mix("21", 0)};
  CHECK(f.dsquare_check(zero));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    CHECK(f.dsquare_check(f.random_complex(Side::kMix, rng)));
    CHECK(f.dsquare_check(f.random_complex(Side::kK, rng)));
  }
  FormalCategory f3(3);
  for (int t = 0; t < 20; ++t) CHECK(f3.dsquare_check(f3.random_complex(Side::kMix, rng)));
}

TEST_CASE("functors on stalks") {
  FormalCategory f(2);
  FormalComplex s = stalk(Side::kMix, mix("21", 0));
  CHECK(gkos(s) == stalk(Side::kPervGr, mix("21", 0)));
  CHECK(f.iota_formal(s) == stalk(Side::kK, plain("21")));
  CHECK(f.v_formal(gkos(s)) == stalk(Side::kPerv, plain("21")));
  CHECK(f.square_check(s));
  CHECK_THROWS_AS((void)gkos(stalk(Side::kK, plain("21"))), std::invalid_argument);
  CHECK_THROWS_AS((void)stalk(Side::kK, mix("21", 0)), std::invalid_argument);
}

TEST_CASE("square commutes") {
  FormalCategory f2(2);
  for (const auto& x : f2.two_term_corpus(Side::kMix)) CHECK(f2.square_check(x));
  FormalCategory f3(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    FormalComplex x = f3.random_complex(Side::kMix, rng);
    CHECK(f3.square_check(x));
    CHECK(gkos(twist(x, 1)) == twist(gkos(x), 1));
  }
}

TEST_CASE("homotopy Homs") {
  FormalCategory f(2);
  FormalComplex e = stalk(Side::kMix, mix("12", 0));
  for (int k = -3; k <= 3; ++k) CHECK(f.hom_homotopy(e, e, k) == (k == 0 ? 1u : 0u));
  // Cone of the degree-one map Q -> D_s: (e,0) -> (s,1).
  FormalComplex cone;
  cone.terms[0] = {mix("12", 0)};
  cone.terms[1] = {mix("21", 1)};
  cone.d[0] = {{QVector{Rational(1)}}};
  CHECK(f.dsquare_check(cone));
  CHECK(f.hom_homotopy(cone, cone, 0) >= 1);
  CHECK(f.hom_homotopy(e, e, 0) == 1);

  std::mt19937_64 rng(5);
  FormalCategory f3(3);
  for (int t = 0; t < 6; ++t) {
    FormalComplex x = f3.random_complex(Side::kMix, rng), y = f3.random_complex(Side::kMix, rng);
    if (!x.generator_count()) continue;
    CHECK(f3.hom_homotopy(x, x, 0) >= 1);
    for (int k = -2; k <= 2; ++k) {
      const std::size_t h = f3.hom_homotopy(x, y, k);
      CHECK(h == f3.hom_homotopy(gkos(x), gkos(y), k));
      FormalComplex ix = f3.iota_formal(x), iy = f3.iota_formal(y);
      const std::size_t hk = f3.hom_homotopy(ix, iy, k);
      CHECK(hk == f3.hom_homotopy(kos_formal(ix), kos_formal(iy), k));
      std::size_t total = 0;
      for (int n = -6; n <= 6; ++n) total += f3.hom_homotopy(x, twist(y, n), k);
      CHECK(hk == total);
    }
  }
}

TEST_CASE("rank one agrees with the Tate point") {
  FormalCategory f(1);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    FormalComplex x = f.random_complex(Side::kMix, rng), y = f.random_complex(Side::kMix, rng);
    tate::BigradedComplex tx = to_tate(x), ty = to_tate(y);
    REQUIRE(tx.dsquare_zero());
    for (int k = -2; k <= 2; ++k) CHECK(f.hom_homotopy(x, y, k) == tate::hom_homotopy(tx, ty, k));
  }
}
