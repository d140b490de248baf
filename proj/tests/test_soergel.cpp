#include <doctest.h>

#include "soergel/soergel.hpp"

using namespace soergel;

namespace {

LaurentPoly lp(std::string_view s) { return LaurentPoly::parse(s); }
std::map<int, std::size_t> dims(std::initializer_list<std::pair<const int, std::size_t>> l) { return l; }

SoergelCategory& cat(int n) {
  static SoergelCategory c1(1), c2(2), c3(3), c4(4);
  switch (n) {
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
    default: return c4;
  }
}

}  // namespace

TEST_CASE("trivial and induced modules") {
  auto& c = cat(2);
  GradedModule q = c.trivial_module();
  CHECK(q.graded_dims() == dims({{0, 1}}));
  for (const auto& a : q.actions()) CHECK(a.is_zero());
  CHECK(c.hom_graded(q, q, 0).size() == 1);

  GradedModule ds = c.induct(1, q);
  ds.validate();
  CHECK(ds.graded_dims() == dims({{-1, 1}, {1, 1}}));
  GradedModule dss = c.induct(1, ds);
  dss.validate();
  CHECK(dss.graded_dims() == dims({{-2, 1}, {0, 2}, {2, 1}}));

  auto& c3 = cat(3);
  GradedModule bs = c3.bott_samelson(Word(3, {1, 2, 1}));
  bs.validate();
  CHECK(bs.graded_dims() == dims({{-3, 1}, {-1, 3}, {1, 3}, {3, 1}}));
  CHECK(c3.bott_samelson(Word(3, {})) == c3.trivial_module());
  for (std::size_t len = 0; len <= 5; ++len)
    for (const Word& w : all_words(3, len)) {
      GradedModule m = c3.bott_samelson(w);
      CHECK(m.dim() == (std::size_t{1} << len));
      CHECK(character(m).is_symmetric());
    }
}

TEST_CASE("hom examples") {
  auto& c = cat(2);
  GradedModule q = c.trivial_module();
  GradedModule ds = c.indecomposable(WeylElement::simple(2, 1));
  CHECK(c.hom_character(ds, ds) == lp("1+v^2"));
  CHECK(c.hom_character(q, ds) == lp("v"));
  for (int d = -3; d <= 3; ++d) CHECK(c.hom_graded(q, ds, d).size() == (d == 1 ? 1u : 0u));
  CHECK(character(q) == lp("1"));
  CHECK(character(ds) == lp("v^-1+v"));
  auto& c3 = cat(3);
  CHECK(character(c3.regular_module()) == lp("1+2v^2+2v^4+v^6"));
  CHECK(character(shift(c3.regular_module(), 3)) == lp("v^-3+2v^-1+2v+v^3"));
}

TEST_CASE("hom by presentation agrees with brute force") {
  for (int n : {2, 3}) {
    auto& c = cat(n);
    std::vector<GradedModule> mods;
    for (const auto& w : c.hecke().group().elements()) mods.push_back(c.indecomposable(w));
    mods.push_back(c.bott_samelson(Word(n, {1, 1})));
    if (n == 3) mods.push_back(c.bott_samelson(Word(3, {1, 2, 1})));
    for (const auto& m : mods)
      for (const auto& k : mods) {
        std::size_t total = 0;
        for (int d = k.min_degree() - m.max_degree(); d <= k.max_degree() - m.min_degree(); ++d) {
          auto basis = c.hom_graded(m, k, d);
          CHECK(basis.size() == hom_dim_bruteforce(m, k, d));
          for (const auto& f : basis) CHECK(is_homomorphism(m, k, f));
          total += basis.size();
        }
        CHECK(total == hom_dim_ungraded(m, k));
      }
  }
}

TEST_CASE("decomposition examples") {
  auto& c2 = cat(2);
  auto s = WeylElement::simple(2, 1);
  CHECK(c2.decompose_bs(Word(2, {1})).multiset() == std::map<std::pair<WeylElement, int>, int>{{{s, 0}, 1}});
  CHECK(c2.decompose_bs(Word(2, {1, 1})).multiset() ==
        std::map<std::pair<WeylElement, int>, int>{{{s, 1}, 1}, {{s, -1}, 1}});
  auto& c3 = cat(3);
  auto w0 = WeylElement::longest(3), s1 = WeylElement::simple(3, 1);
  CHECK(c3.decompose_bs(Word(3, {1, 2, 1})).multiset() ==
        std::map<std::pair<WeylElement, int>, int>{{{w0, 0}, 1}, {{s1, 0}, 1}});
  CHECK(c3.indecomposable(w0).dim() == 6);
  CHECK(character(c3.indecomposable(w0)) == lp("v^-3+2v^-1+2v+v^3"));
  CHECK(c3.indecomposable(WeylElement::identity(3)) == c3.trivial_module());
  CHECK(c3.indecomposable(s1) == c3.bott_samelson(Word(3, {1})));
}

TEST_CASE("hecke class of Bott-Samelson modules") {
  auto& c2 = cat(2);
  auto s = WeylElement::simple(2, 1);
  CHECK(c2.hecke_class(c2.trivial_module()) == c2.hecke().kl_basis(WeylElement::identity(2)));
  CHECK(c2.hecke_class(c2.bott_samelson(Word(2, {1, 1}))) == lp("v^-1+v") * c2.hecke().kl_basis(s));
  auto& c3 = cat(3);
  for (std::size_t len = 0; len <= 3; ++len)
    for (const Word& w : all_words(3, len)) {
      Decomposition d = c3.decompose_bs(w);
      CHECK(c3.hecke_class(d) == c3.hecke().product_bs(w));
      CHECK(c3.decompose_search(c3.bott_samelson(w)).multiset() == d.multiset());
    }
}

TEST_CASE("locality and endomorphisms") {
  for (int n : {2, 3}) {
    auto& c = cat(n);
    for (const auto& w : c.hecke().group().elements())
      CHECK(c.hom_graded(c.indecomposable(w), c.indecomposable(w), 0).size() == 1);
    auto w0 = WeylElement::longest(n);
    CHECK(c.indecomposable(w0).dim() == c.ring().dim());
    EndoAlgebra e = c.endo_algebra({{w0, 0}});
    std::map<int, std::size_t> expect;
    for (const auto& [d, k] : c.ring().graded_dims()) expect[d] = k;
    CHECK(e.graded_dims() == expect);
  }
  CHECK(cat(1).endo_algebra({{WeylElement::identity(1), 0}}).dim() == 1);
  auto& c2 = cat(2);
  EndoAlgebra a = c2.endo_algebra({{WeylElement::identity(2), 0}, {WeylElement::simple(2, 1), 0}});
  CHECK(a.dim() == 5);
  // Associativity of the structure constants.
  auto t = a.structure_constants();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        QVector left(a.dim()), right(a.dim());
        for (std::size_t m = 0; m < a.dim(); ++m) {
          left = left + scaled(t[i][j][m], t[m][k]);
          right = right + scaled(t[j][k][m], t[i][m]);
        }
        CHECK(left == right);
      }
}

TEST_CASE("S_4 indecomposables") {
  auto& c = cat(4);
  for (const auto& w : c.hecke().group().elements()) {
    const GradedModule& d = c.indecomposable(w);
    CHECK(character(d) == c.hecke().character(c.hecke().kl_basis(w)));
  }
  CHECK(c.indecomposable(WeylElement::longest(4)).dim() == 24);
}

TEST_CASE("size cap") {
  Limits l;
  l.max_dim = 10;
  SoergelCategory c(3, l);
  CHECK_THROWS_AS((void)c.bott_samelson(Word(3, {1, 2})), SizeLimitError);
}
