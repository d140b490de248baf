#include <doctest.h>

#include <random>

#include "soergel/coinvariant.hpp"
#include "soergel/errors.hpp"

using namespace soergel;

namespace {

CoinvariantElement random_element(std::mt19937& rng, const CoinvariantRing& c) {
  std::uniform_int_distribution<int> d(-3, 3);
  CoinvariantElement e = c.zero();
  for (std::size_t i = 0; i < c.dim(); ++i) e.coords[i] = d(rng);
  return c.scale(1, e);
}

}  // namespace

TEST_CASE("ring dimensions") {
  CHECK(CoinvariantRing(1).dim() == 1);
  CoinvariantRing c2(2);
  CHECK(c2.dim() == 2);
  CHECK(c2.graded_dims() == std::map<int, std::size_t>{{0, 1}, {2, 1}});
  CoinvariantRing c3(3);
  CHECK(c3.dim() == 6);
  CHECK(c3.poincare() == LaurentPoly::parse("1+2v^2+2v^4+v^6"));
  CoinvariantRing c4(4);
  CHECK(c4.dim() == 24);
  CHECK(c4.poincare() == LaurentPoly::parse("1+3v^2+5v^4+6v^6+5v^8+3v^10+v^12"));
  CHECK(c4.poincare().shifted(-c4.top_degree() / 2).is_symmetric());
  CHECK_THROWS_AS(CoinvariantRing(6), SizeLimitError);
}

TEST_CASE("normal form and Weyl action") {
  CoinvariantRing c2(2);
  CHECK(c2.normal_form(MultiPoly::constant(2, 1)) == c2.one());
  CHECK(c2.normal_form(MultiPoly::elementary(2, 1)).is_zero());
  auto x1 = MultiPoly::variable(2, 1);
  CHECK(c2.normal_form(x1 * x1).is_zero());
  auto s = WeylElement::simple(2, 1);
  CHECK(c2.weyl_act(s, c2.variable(1)) == c2.scale(-1, c2.variable(1)));
  CHECK(c2.weyl_act(WeylElement::identity(2), c2.variable(1)) == c2.variable(1));

  CoinvariantRing c3(3);
  CHECK(c3.normal_form(MultiPoly::elementary(3, 2)).is_zero());
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto a = random_element(rng, c3), b = random_element(rng, c3);
    for (const auto& w : all_elements(3))
      CHECK(c3.weyl_act(w, c3.multiply(a, b)) == c3.multiply(c3.weyl_act(w, a), c3.weyl_act(w, b)));
  }
  // Top degree of C(S_3) is the sign representation.
  auto top = c3.basis_element(c3.dim() - 1);
  for (const auto& w : all_elements(3))
    CHECK(c3.weyl_act(w, top) == c3.scale(w.length() % 2 ? -1 : 1, top));
}

TEST_CASE("demazure examples") {
  CoinvariantRing c2(2);
  CHECK(c2.demazure(1, c2.one()).is_zero());
  CHECK(c2.demazure(1, c2.variable(1)) == c2.one());
  CHECK(c2.demazure(1, c2.variable(2)) == c2.scale(-1, c2.one()));
}

TEST_CASE("demazure calculus on the staircase basis") {
  for (int n : {2, 3, 4}) {
    CoinvariantRing c(n);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      auto b = c.basis_element(j);
      for (int i = 1; i < n; ++i) {
        CHECK(c.demazure(i, c.demazure(i, b)).is_zero());
        auto d = c.demazure(i, b);
        if (!d.is_zero()) CHECK(*d.degree == c.degree(j) - 2);
      }
      for (int i = 1; i + 1 < n; ++i)
        CHECK(c.demazure(i, c.demazure(i + 1, c.demazure(i, b))) ==
              c.demazure(i + 1, c.demazure(i, c.demazure(i + 1, b))));
    }
  }
}

TEST_CASE("twisted Leibniz and C^s-linearity") {
  std::mt19937 rng(9);
  for (int n : {3, 4}) {
    CoinvariantRing c(n);
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, c), b = random_element(rng, c);
      for (int i = 1; i < n; ++i) {
        auto s = WeylElement::simple(n, i);
        auto lhs = c.demazure(i, c.multiply(a, b));
        auto rhs = c.add(c.multiply(c.demazure(i, a), b), c.multiply(c.weyl_act(s, a), c.demazure(i, b)));
        CHECK(lhs == rhs);
        auto inv = c.invariants_basis(i);
        std::uniform_int_distribution<std::size_t> pick(0, inv.size() - 1);
        auto f = inv[pick(rng)];
        CHECK(c.demazure(i, c.multiply(f, a)) == c.multiply(f, c.demazure(i, a)));
      }
    }
  }
}

TEST_CASE("invariants and split over C^s") {
  CoinvariantRing c2(2);
  auto inv2 = c2.invariants_basis(1);
  REQUIRE(inv2.size() == 1);
  CHECK(*inv2[0].degree == 0);
  CoinvariantRing c3(3);
  CHECK(c3.invariants_basis(1).size() == 3);
  for (int n : {2, 3, 4}) {
    CoinvariantRing c(n);
    for (int i = 1; i < n; ++i) {
      auto inv = c.invariants_basis(i);
      CHECK(inv.size() * 2 == c.dim());
      CHECK(*inv.front().degree == 0);
      for (const auto& g : c.invariant_generators(i)) CHECK(c.is_invariant(i, g));
      for (std::size_t j = 0; j < c.dim(); ++j) {
        auto b = c.basis_element(j);
        auto [a, d] = c.split_over_Cs(i, b);
        CHECK(c.is_invariant(i, a));
        CHECK(c.is_invariant(i, d));
        CHECK(c.add(a, c.multiply(c.variable(i), d)) == b);
      }
    }
  }
  auto [a1, b1] = c2.split_over_Cs(1, c2.one());
  CHECK(a1 == c2.one());
  CHECK(b1.is_zero());
  auto [a2, b2] = c2.split_over_Cs(1, c2.variable(1));
  CHECK(a2.is_zero());
  CHECK(b2 == c2.one());
  auto [a3, b3] = c2.split_over_Cs(1, c2.variable(2));
  CHECK(a3.is_zero());
  CHECK(b3 == c2.scale(-1, c2.one()));
}

TEST_CASE("element formatting") {
  CoinvariantRing c3(3);
  CHECK(c3.to_string(c3.variable(1)) == "x1");
  CHECK(c3.to_string(c3.zero()) == "0");
}
