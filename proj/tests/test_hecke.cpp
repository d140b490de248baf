#include <doctest.h>

#include <random>

#include "soergel/hecke.hpp"

using namespace soergel;

namespace {

LaurentPoly lp(std::string_view s) { return LaurentPoly::parse(s); }

HeckeElement random_element(std::mt19937& rng, const WeylGroup& g) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  HeckeElement h(g.rank());
  for (int k = 0; k < 3; ++k) h.add_term(g.element(pick(rng)), LaurentPoly::monomial(e(rng), c(rng)));
  return h;
}

}  // namespace

TEST_CASE("multiplication examples") {
  const int n = 3;
  auto e = HeckeElement::standard(WeylElement::identity(n));
  auto hs = HeckeElement::standard(WeylElement::simple(n, 1));
  auto h2 = HeckeElement::standard(WeylElement::simple(n, 2));
  CHECK(mult(e, hs + h2) == hs + h2);
  CHECK(mult(hs, hs) == e + lp("v^-1-v") * hs);
  CHECK(mult(hs, h2) == HeckeElement::standard(evaluate(Word(n, {1, 2}))));
}

TEST_CASE("bar involution examples") {
  const int n = 2;
  auto e = HeckeElement::standard(WeylElement::identity(n));
  auto hs = HeckeElement::standard(WeylElement::simple(n, 1));
  CHECK(bar(e) == e);
  CHECK(bar(hs) == hs + lp("-v^-1+v") * e);
  CHECK(bar(hs + LaurentPoly::v() * e) == hs + LaurentPoly::v() * e);
}

TEST_CASE("associativity and bar on random elements") {
  std::mt19937 rng(5);
  for (int n : {3, 4}) {
    WeylGroup g(n);
    for (int t = 0; t < 15; ++t) {
      auto a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
      CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
      CHECK(bar(bar(a)) == a);
      CHECK(bar(mult(a, b)) == mult(bar(a), bar(b)));
    }
  }
}

TEST_CASE("KL basis") {
  HeckeAlgebra h3(3);
  auto e = WeylElement::identity(3);
  CHECK(h3.kl_basis(e) == HeckeElement::standard(e));
  auto s = WeylElement::simple(3, 1);
  CHECK(h3.kl_basis(s) == HeckeElement::standard(s) + LaurentPoly::v() * HeckeElement::standard(e));
  auto w0 = WeylElement::longest(3);
  HeckeElement expect(3);
  for (const auto& x : all_elements(3)) expect.add_term(x, LaurentPoly::monomial(3 - x.length()));
  CHECK(h3.kl_basis(w0) == expect);
  for (const auto& x : all_elements(3))
    for (const auto& w : all_elements(3)) {
      LaurentPoly p = h3.kl_poly(x, w);
      if (bruhat_leq(x, w)) {
        CHECK(p == LaurentPoly::monomial(w.length() - x.length()));
      } else {
        CHECK(p.is_zero());
      }
    }

  for (int n : {3, 4}) {
    HeckeAlgebra h(n);
    for (const auto& w : h.group().elements()) {
      const HeckeElement& b = h.kl_basis(w);
      CHECK(bar(b) == b);
      CHECK(b.coeff(w) == LaurentPoly(1));
      for (const auto& [x, p] : b.terms()) {
        CHECK(bruhat_leq(x, w));
        if (x != w) CHECK(p.min_exponent() >= 1);
      }
    }
  }
  // First non-trivial KL polynomial in S_4: P_{1324,3412} = 1 + q.
  HeckeAlgebra h4(4);
  CHECK(h4.classical_kl_poly(WeylElement::parse("1324"), WeylElement::parse("3412")) == lp("1+v"));
  CHECK(h4.classical_kl_poly(WeylElement::parse("2143"), WeylElement::parse("4231")) == lp("1+v"));
}

TEST_CASE("Bott-Samelson products and KL expansion") {
  HeckeAlgebra h2(2);
  auto s = WeylElement::simple(2, 1);
  CHECK(h2.product_bs(Word(2, {1})) == h2.kl_basis(s));
  CHECK(h2.product_bs(Word(2, {1, 1})) == lp("v^-1+v") * h2.kl_basis(s));
  CHECK(h2.kl_expand(h2.kl_basis(s)) == std::map<WeylElement, LaurentPoly>{{s, 1}});
  CHECK(h2.kl_expand(h2.product_bs(Word(2, {1, 1}))) == std::map<WeylElement, LaurentPoly>{{s, lp("v^-1+v")}});

  HeckeAlgebra h3(3);
  auto w0 = WeylElement::longest(3), s1 = WeylElement::simple(3, 1);
  CHECK(h3.product_bs(Word(3, {1, 2, 1})) == h3.kl_basis(w0) + h3.kl_basis(s1));
  CHECK(h3.kl_expand(h3.product_bs(Word(3, {1, 2, 1}))) ==
        std::map<WeylElement, LaurentPoly>{{w0, 1}, {s1, 1}});

  for (int n : {3, 4}) {
    HeckeAlgebra h(n);
    for (std::size_t len = 0; len <= 5; ++len)
      for (const Word& word : all_words(n, len)) {
        auto m = h.kl_expand(h.product_bs(word));
        for (const auto& [x, c] : m) {
          CHECK(c.has_nonnegative_integer_coeffs());
          CHECK(c.is_symmetric());
        }
        CHECK(h.kl_combine(m) == h.product_bs(word));
      }
  }
}

TEST_CASE("pairing and character") {
  HeckeAlgebra h2(2);
  auto e = WeylElement::identity(2), s = WeylElement::simple(2, 1);
  CHECK(h2.pairing(h2.kl_basis(e), h2.kl_basis(e)) == LaurentPoly(1));
  CHECK(h2.pairing(h2.kl_basis(s), h2.kl_basis(s)) == lp("1+v^2"));
  CHECK(h2.pairing(h2.kl_basis(e), h2.kl_basis(s)) == lp("v"));
  HeckeAlgebra h3(3);
  CHECK(h3.pairing(h3.kl_basis(WeylElement::identity(3)), h3.kl_basis(WeylElement::longest(3))) == lp("v^3"));
  // Both conventions agree on self-dual elements.
  for (const auto& x : h3.group().elements())
    for (const auto& y : h3.group().elements())
      CHECK(h3.pairing(h3.kl_basis(x), h3.kl_basis(y), PairingConvention::kInverseLinear) ==
            h3.pairing(h3.kl_basis(x), h3.kl_basis(y), PairingConvention::kInverseBar));
  CHECK(h3.character(h3.kl_basis(WeylElement::longest(3))) == lp("v^-3+2v^-1+2v+v^3"));
  CHECK(h2.character(h2.kl_basis(s)) == lp("v^-1+v"));
}
