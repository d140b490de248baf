#include <doctest.h>

#include <functional>

#include "soergel/errors.hpp"
#include "soergel/weyl.hpp"

using namespace soergel;

namespace {

// Subword property, by brute force over all subsets of one reduced word.
bool bruhat_by_subwords(const WeylElement& x, const WeylElement& w) {
  Word rw = reduced_word(w);
  const std::size_t l = rw.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) sub.push_back(rw.letters[i]);
    if (evaluate(Word(w.rank(), sub)) == x) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("length and evaluate") {
  CHECK(WeylElement::identity(3).length() == 0);
  CHECK(WeylElement::simple(3, 1).length() == 1);
  CHECK(WeylElement::longest(3).length() == 3);
  CHECK(evaluate(Word(3, {})).is_identity());
  CHECK(evaluate(Word(3, {1, 1})).is_identity());
  CHECK(evaluate(Word(3, {1, 2, 1})) == WeylElement::parse("321"));
  CHECK(evaluate(Word(3, {1, 2})) * evaluate(Word(3, {2})) == evaluate(Word(3, {1, 2, 2})));
}

TEST_CASE("bruhat examples") {
  auto e = WeylElement::identity(3);
  auto s1 = WeylElement::simple(3, 1);
  auto w0 = WeylElement::longest(3);
  auto s1s2 = evaluate(Word(3, {1, 2})), s2s1 = evaluate(Word(3, {2, 1}));
  for (const auto& w : all_elements(3)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, w0));
  CHECK(!bruhat_leq(s1s2, s2s1));
  CHECK(!bruhat_leq(s2s1, s1s2));
}

TEST_CASE("bruhat agrees with the subword property and is a partial order") {
  for (int n : {3, 4}) {
    WeylGroup g(n);
    const auto& els = g.elements();
    for (std::size_t x = 0; x < els.size(); ++x)
      for (std::size_t w = 0; w < els.size(); ++w) {
        bool b = bruhat_by_subwords(els[x], els[w]);
        CHECK(bruhat_leq(els[x], els[w]) == b);
        CHECK(g.leq(x, w) == b);
      }
    for (std::size_t x = 0; x < els.size(); ++x) {
      CHECK(g.leq(x, x));
      for (std::size_t y = 0; y < els.size(); ++y) {
        if (x != y && g.leq(x, y)) CHECK(!g.leq(y, x));
        for (std::size_t z = 0; z < els.size(); ++z)
          if (g.leq(x, y) && g.leq(y, z)) CHECK(g.leq(x, z));
      }
    }
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(WeylElement::identity(3)) == std::set<Word>{Word(3, {})});
  CHECK(reduced_words(WeylElement::longest(3)) == std::set<Word>{Word(3, {1, 2, 1}), Word(3, {2, 1, 2})});
  CHECK(reduced_words(WeylElement::simple(3, 1)) == std::set<Word>{Word(3, {1})});
  // Exhaustive: every word of length <= 5 in S_4 is reduced iff it lies in reduced_words.
  for (std::size_t len = 0; len <= 5; ++len)
    for (const Word& word : all_words(4, len)) {
      WeylElement w = evaluate(word);
      CHECK(w.length() <= static_cast<int>(len));
      CHECK((w.length() == static_cast<int>(len)) == reduced_words(w).contains(word));
    }
  CHECK(reduced_words(WeylElement::longest(4)).size() == 16);
}

TEST_CASE("demazure product") {
  CHECK(demazure_product(Word(3, {1, 1})) == WeylElement::simple(3, 1));
  CHECK(demazure_product(Word(3, {1, 2, 1, 2})) == WeylElement::longest(3));
  for (const auto& w : all_elements(4))
    for (const Word& rw : reduced_words(w)) CHECK(demazure_product(rw) == w);
}

TEST_CASE("elements and descents") {
  CHECK(all_elements(1).size() == 1);
  CHECK(all_elements(3).size() == 6);
  CHECK(WeylElement::longest(3).right_descents() == std::set<int>{1, 2});
  CHECK_THROWS_AS(all_elements(6), SizeLimitError);
  for (const auto& w : all_elements(4))
    for (int i = 1; i < 4; ++i) CHECK(w.right_descents().contains(i) == (w.times_simple(i).length() < w.length()));
  // Length generating function of S_4: [4]_q! = 1,3,5,6,5,3,1.
  std::vector<int> counts(7, 0);
  for (const auto& w : all_elements(4)) ++counts[static_cast<std::size_t>(w.length())];
  CHECK(counts == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("word serialization") {
  CHECK(Word::parse(3, "1,2,1") == Word(3, {1, 2, 1}));
  CHECK(Word(3, {1, 2, 1}).to_string() == "1,2,1");
  CHECK(Word::parse(3, "").size() == 0);
  CHECK_THROWS(Word::parse(3, "1,3"));
  CHECK_THROWS(Word::parse(3, "1,"));
  CHECK(WeylElement::parse("321").to_string() == "321");
  CHECK_THROWS(WeylElement::parse("331"));
}
