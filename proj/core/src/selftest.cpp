#include "soergel/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "soergel/coinvariant.hpp"
#include "soergel/dual.hpp"
#include "soergel/formal.hpp"
#include "soergel/hecke.hpp"
#include "soergel/soergel.hpp"
#include "soergel/tate.hpp"

namespace soergel {
namespace {

// Counts checks and keeps the first failure.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (!failures) first = what;
    ++failures;
  }
  [[nodiscard]] bool ok() const { return failures == 0; }
  [[nodiscard]] std::string summary(const std::string& extra = "") const {
    std::string s = std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks";
    if (!extra.empty()) s += "; " + extra;
    if (failures) s += "; first failure: " + first;
    return s;
  }
};

using Outcome = std::pair<bool, std::string>;

Outcome coinvariant_dims(std::uint64_t) {
  Tally t;
  const std::size_t expect[] = {2, 6, 24};
  std::string dims;
  for (int n = 2; n <= 4; ++n) {
    CoinvariantRing c(n);
    t.check(c.dim() == expect[n - 2], "dim C for n=" + std::to_string(n));
    const LaurentPoly p = c.poincare();
    t.check(p.shifted(-c.top_degree() / 2).is_symmetric(), "Poincare polynomial palindromic for n=" + std::to_string(n));
    dims += (dims.empty() ? "" : ",") + std::to_string(c.dim());
  }
  return {t.ok(), t.summary("dim C = " + dims)};
}

Outcome demazure_calculus(std::uint64_t) {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    CoinvariantRing c(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    std::vector<CoinvariantElement> basis;
    for (std::size_t j = 0; j < c.dim(); ++j) basis.push_back(c.basis_element(j));
    for (const auto& b : basis) {
      for (int i = 1; i < n; ++i) t.check(c.demazure(i, c.demazure(i, b)).is_zero(), "d_i^2 = 0" + tag);
      for (int i = 1; i + 1 < n; ++i)
        t.check(c.demazure(i, c.demazure(i + 1, c.demazure(i, b))) ==
                    c.demazure(i + 1, c.demazure(i, c.demazure(i + 1, b))),
                "braid relation" + tag);
      for (int i = 1; i + 2 < n; ++i)
        for (int j = i + 2; j < n; ++j)
          t.check(c.demazure(i, c.demazure(j, b)) == c.demazure(j, c.demazure(i, b)), "commuting relation" + tag);
    }
    for (int i = 1; i < n; ++i) {
      const WeylElement s = WeylElement::simple(n, i);
      for (const auto& a : basis)
        for (const auto& b : basis)
          t.check(c.demazure(i, c.multiply(a, b)) ==
                      c.add(c.multiply(c.demazure(i, a), b), c.multiply(c.weyl_act(s, a), c.demazure(i, b))),
                  "twisted Leibniz" + tag);
    }
  }
  return {t.ok(), t.summary()};
}

Outcome bs_oracle(std::uint64_t) {
  Tally t;
  auto run = [&](const SoergelCategory& cat, const Word& w) {
    const auto expected = expected_summands(cat.hecke().kl_expand(cat.hecke().product_bs(w)));
    GradedModule m = cat.bott_samelson(w);
    t.check(cat.decompose_search(m).multiset() == expected, "search decomposition of BS(" + w.to_string() + ")");
    t.check(cat.decompose(m, expected).multiset() == expected, "oracle splitting of BS(" + w.to_string() + ")");
  };
  SoergelCategory s3(3);
  std::size_t n3 = 0;
  for (std::size_t len = 0; len <= 4; ++len)
    for (const Word& w : all_words(3, len)) {
      run(s3, w);
      ++n3;
    }
  SoergelCategory s4(4);
  const std::vector<std::vector<int>> curated = {{1, 2, 3},       {2, 1, 3},       {1, 3, 2},    {2, 1, 3, 2},
                                                 {1, 2, 3, 2},    {1, 2, 1, 3},    {3, 2, 1, 2}, {1, 1, 2},
                                                 {2, 3, 2, 3},    {1, 2, 3, 2, 1}, {2, 1, 3, 2, 1}, {1, 2, 1, 3, 2},
                                                 {2, 1, 2, 3, 2}, {1, 3, 2, 1, 3}};
  for (const auto& l : curated) run(s4, Word(4, l));
  return {t.ok(), t.summary(std::to_string(n3) + " S3 words, " + std::to_string(curated.size()) + " S4 words")};
}

Outcome hom_formula(std::uint64_t) {
  Tally t;
  SoergelCategory cat(3);
  const auto& hk = cat.hecke();
  const auto elems = all_elements(3);
  for (const auto& x : elems)
    for (const auto& y : elems)
      t.check(cat.hom_character(cat.indecomposable(x), cat.indecomposable(y)) ==
                  hk.pairing(hk.kl_basis(x), hk.kl_basis(y)),
              "Hom(D_" + x.to_string() + ", D_" + y.to_string() + ")");
  return {t.ok(), t.summary()};
}

Outcome degrading(std::uint64_t seed) {
  Tally t;
  std::size_t pairs = 0;
  for (int n : {2, 3}) {
    SoergelCategory cat(n);
    std::vector<std::pair<std::string, GradedModule>> corpus;
    for (const auto& w : all_elements(n)) corpus.emplace_back("D_" + w.to_string(), cat.indecomposable(w));
    for (std::size_t len = 1; len <= 3; ++len)
      for (const Word& w : all_words(n, len)) corpus.emplace_back("BS(" + w.to_string() + ")", cat.bott_samelson(w));
    for (const auto& [na, a] : corpus)
      for (const auto& [nb, b] : corpus) {
        ++pairs;
        t.check(Rational(static_cast<long long>(hom_dim_ungraded(a, b))) == cat.hom_character(a, b).at_one(),
                "Hom(" + na + ", " + nb + ") in rank " + std::to_string(n));
      }
  }
  std::mt19937_64 rng(seed);
  std::size_t cpairs = 0;
  for (int n : {2, 3}) {
    formal::FormalCategory f(n);
    for (int i = 0; i < 40; ++i) {
      auto x = f.random_complex(formal::Side::kMix, rng);
      auto y = f.random_complex(formal::Side::kMix, rng);
      ++cpairs;
      for (int k = -2; k <= 2; ++k) {
        std::size_t total = 0;
        for (int m = -8; m <= 8; ++m) total += f.hom_homotopy(x, formal::twist(y, m), k);
        t.check(f.hom_homotopy(f.iota_formal(x), f.iota_formal(y), k) == total,
                "complex pair " + std::to_string(i) + " in rank " + std::to_string(n));
      }
    }
  }
  return {t.ok(), t.summary(std::to_string(pairs) + " module pairs, " + std::to_string(cpairs) + " complex pairs")};
}

Outcome endomorphismensatz(std::uint64_t) {
  Tally t;
  for (int n : {2, 3}) {
    SoergelCategory cat(n);
    const GradedModule& d = cat.indecomposable(WeylElement::longest(n));
    std::map<int, std::size_t> end_dims;
    const LaurentPoly end = cat.hom_character(d, d);
    for (const auto& [deg, c] : end.terms())
      end_dims[deg] = static_cast<std::size_t>(c.to_int64());
    t.check(end_dims == cat.ring().graded_dims(), "End(D_w0) in rank " + std::to_string(n));
  }
  return {t.ok(), t.summary()};
}

Outcome tate_point(std::uint64_t seed) {
  using namespace tate;
  Tally t;
  std::mt19937_64 rng(seed);
  std::vector<BigradedComplex> sample;
  for (int i = 0; i < 200; ++i) sample.push_back(random_complex(rng));
  for (const auto& x : sample) {
    UngradedComplex ix = iota_collapse(x);
    for (int m = -3; m <= 3; ++m) {
      t.check(weights_leq(x, m) == degrees_leq(ix, m), "weight exactness (<=)");
      t.check(weights_geq(x, m) == degrees_geq(ix, m), "weight exactness (>=)");
    }
  }
  // The Bott witness Q(1)[2] sits at (c, g) = (-2, -1).
  BigradedComplex w = twist_shift(simple(0, 0), 1, 2);
  UngradedComplex q;
  q.dims[0] = 1;
  t.check(w == simple(-2, -1), "Q(1)[2] at (-2,-1)");
  t.check(iota_collapse(w) == q, "iota(Q(1)[2]) = Q");
  t.check(degrees_leq(w, -2) && !degrees_leq(iota_collapse(w), -2), "t-exactness fails at Q(1)[2]");
  std::size_t failing = 0, simples = 0;
  for (int p = -3; p <= 3; ++p)
    for (int qq = -3; qq <= 3; ++qq) {
      BigradedComplex s = twist_shift(simple(0, 0), p, qq);
      const bool exact = degrees_leq(s, -qq) == degrees_leq(iota_collapse(s), -qq) &&
                         degrees_geq(s, -qq) == degrees_geq(iota_collapse(s), -qq) &&
                         degrees_leq(s, -qq - 1) == degrees_leq(iota_collapse(s), -qq - 1);
      ++simples;
      if (!exact) ++failing;
      t.check(exact == (p == 0), "t-exactness on Q(" + std::to_string(p) + ")[" + std::to_string(qq) + "]");
    }
  std::size_t same = 0;
  for (int i = 0; i < 1000; ++i) {
    UngradedComplex u = minimize(random_ungraded(rng));
    bool eq = true;
    for (int m = -4; m <= 4; ++m) {
      eq = eq && minimize(t_truncate_leq(u, m)) == minimize(w_truncate_leq(u, m));
      eq = eq && minimize(t_truncate_geq(u, m)) == minimize(w_truncate_geq(u, m));
    }
    t.check(eq, "t and w truncations on random complex " + std::to_string(i));
    if (eq) ++same;
  }
  std::vector<BigradedComplex> small(sample.begin(), sample.begin() + 12);
  t.check(check_t_axioms(small).ok(), "t-structure axioms");
  t.check(check_w_axioms(small).ok(), "weight structure axioms");
  std::ostringstream extra;
  extra << "t-exactness fails on " << failing << "/" << simples << " simples, all twisted; truncations agree on "
        << same << "/1000";
  return {t.ok(), t.summary(extra.str())};
}

Outcome main_square(std::uint64_t seed) {
  Tally t;
  std::ostringstream extra;
  for (int n : {2, 3}) {
    formal::FormalCategory f(n);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
    std::size_t ok = 0;
    for (int i = 0; i < 500; ++i) {
      auto x = f.random_complex(formal::Side::kMix, rng);
      const bool good = f.dsquare_check(x) && f.square_check(x);
      t.check(good, "square on complex " + std::to_string(i) + " in rank " + std::to_string(n));
      if (good) ++ok;
    }
    extra << (n == 2 ? "" : ", ") << "rank " << n << ": " << ok << "/500";
  }
  return {t.ok(), t.summary(extra.str())};
}

Outcome dual_side(std::uint64_t) {
  Tally t;
  std::ostringstream extra;
  for (int n : {1, 2, 3}) {
    SoergelCategory cat(n);
    dual::DualAlgebra a(cat);
    if (n == 2) t.check(a.dim() == 5, "dim A = 5 for S2");
    if (n >= 2) {
      QMatrix inv = a.inverse_cartan();
      for (std::size_t x = 0; x < a.elements().size(); ++x) {
        dual::Resolution r = a.resolve(x);
        t.check(r.complete, "finite resolution");
        for (std::size_t y = 0; y < a.elements().size(); ++y) {
          long long chi = 0;
          for (std::size_t k = 0; k < r.terms.size(); ++k)
            chi += (k % 2 ? -1 : 1) * static_cast<long long>(dual::DualAlgebra::ext_dims(r, y, k).dim);
          t.check(Rational(chi) == inv(x, y), "Euler characteristic in rank " + std::to_string(n));
        }
      }
    }
    auto k = dual::koszulity_check(a);
    t.check(k.koszul, "koszulity in rank " + std::to_string(n));
    extra << (n == 1 ? "" : ", ") << "rank " << n << ": dim A " << a.dim() << ", max k " << k.max_k;
  }
  return {t.ok(), t.summary(extra.str())};
}

Outcome determinism(std::uint64_t seed) {
  Tally t;
  for (int rep = 0; rep < 2; ++rep) {
    std::mt19937_64 a(seed), b(seed);
    t.check(tate::random_complex(a) == tate::random_complex(b), "seeded Tate corpus");
    formal::FormalCategory f(2);
    std::mt19937_64 c(seed), d(seed);
    t.check(f.random_complex(formal::Side::kMix, c) == f.random_complex(formal::Side::kMix, d),
            "seeded formal corpus");
  }
  return {t.ok(), t.summary()};
}

struct Entry {
  const char* name;
  double budget;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"coinvariant dimensions", 5, coinvariant_dims},
      {"Demazure calculus", 30, demazure_calculus},
      {"Bott-Samelson decompositions against the Hecke oracle", 300, bs_oracle},
      {"graded Hom formula in S3", 60, hom_formula},
      {"degrading", 300, degrading},
      {"End(D_w0) against C", 60, endomorphismensatz},
      {"Tate point structures", 30, tate_point},
      {"commutative square", 300, main_square},
      {"dual side Ext and Koszulity", 600, dual_side},
      {"determinism", 30, determinism},
  };
  return e;
}

}  // namespace

bool SelftestReport::pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  out << "selftest seed " << seed << "\n";
  for (const auto& c : criteria)
    out << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << ": " << c.detail << "\n";
  out << (pass() ? "all criteria passed" : "some criteria failed") << "\n";
  return out.str();
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("run_criterion: no criterion " + std::to_string(id));
  const Entry& e = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  r.budget_seconds = e.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = e.run(seed);
    r.pass = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SelftestReport run_selftest(std::uint64_t seed, const std::set<int>& only) {
  SelftestReport rep;
  rep.seed = seed;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (only.empty() || only.contains(id)) rep.criteria.push_back(run_criterion(id, seed));
  return rep;
}

}  // namespace soergel
