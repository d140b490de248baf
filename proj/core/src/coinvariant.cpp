#include "soergel/coinvariant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "soergel/errors.hpp"

namespace soergel {
namespace {

std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == e.size()) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  if (nvars == 0) return out;
  rec(0, degree);
  return out;
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

CoinvariantRing::CoinvariantRing(int n, int cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("CoinvariantRing: rank must be positive");
  if (n > cap)
    throw SizeLimitError("coinvariant ring of S_" + std::to_string(n) + " exceeds the rank cap " +
                         std::to_string(cap));
  const auto un = static_cast<std::size_t>(n);

  // Staircase basis, ordered by degree then reverse-lex of the exponent.
  std::function<void(std::size_t, Exponent&)> stairs = [&](std::size_t i, Exponent& e) {
    if (i == un) {
      basis_.push_back(e);
      return;
    }
    for (int a = 0; a <= n - 1 - int(i); ++a) {
      e[i] = a;
      stairs(i + 1, e);
    }
  };
  Exponent scratch(un, 0);
  stairs(0, scratch);
  std::stable_sort(basis_.begin(), basis_.end(), [](const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    degrees_.push_back(2 * total_degree(basis_[i]));
    by_degree_[degrees_.back()].push_back(i);
    basis_index_.emplace(basis_[i], i);
  }

  std::vector<MultiPoly> elementary;
  for (int j = 1; j <= n; ++j) elementary.push_back(MultiPoly::elementary(n, j));

  const int top = n * (n - 1) / 2;
  for (int k = 0; k <= top; ++k) {
    std::vector<Exponent> monos = monomials_of_degree(n, k);
    // Non-staircase monomials first so that they become the pivots.
    std::stable_partition(monos.begin(), monos.end(),
                          [&](const Exponent& e) { return !basis_index_.contains(e); });
    std::size_t n_free = 0;
    std::map<Exponent, std::size_t> col;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      col.emplace(monos[c], c);
      if (!basis_index_.contains(monos[c])) ++n_free;
    }
    RowSpace ideal(monos.size());
    for (int j = 1; j <= n && j <= k && ideal.rank() < n_free; ++j) {
      for (const Exponent& m : monomials_of_degree(n, k - j)) {
        MultiPoly gen = MultiPoly::monomial(m) * elementary[static_cast<std::size_t>(j - 1)];
        QVector row(monos.size());
        for (const auto& [e, c] : gen.terms()) row[col.at(e)] = c;
        ideal.insert(std::move(row));
        if (ideal.rank() == n_free) break;
      }
    }
    if (ideal.rank() != n_free)
      throw std::logic_error("CoinvariantRing: staircase monomials do not span the quotient");
    for (std::size_t r = 0; r < ideal.rank(); ++r) {
      if (ideal.pivots()[r] >= n_free)
        throw std::logic_error("CoinvariantRing: staircase monomials are not independent");
      const QVector& row = ideal.rows()[r];
      QVector nf(basis_.size());
      for (std::size_t c = n_free; c < monos.size(); ++c)
        if (!row[c].is_zero()) nf[basis_index_.at(monos[c])] = -row[c];
      reductions_.emplace(monos[ideal.pivots()[r]], std::move(nf));
    }
    for (std::size_t c = n_free; c < monos.size(); ++c) {
      QVector nf(basis_.size());
      nf[basis_index_.at(monos[c])] = 1;
      reductions_.emplace(monos[c], std::move(nf));
    }
  }

  zero_coords_.assign(dim(), Rational());
  for (int i = 1; i <= n; ++i) {
    QMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Exponent e = basis_[j];
      ++e[static_cast<std::size_t>(i - 1)];
      const QVector& nf = monomial_normal_form(e);
      for (std::size_t r = 0; r < dim(); ++r) m(r, j) = nf[r];
    }
    x_action_.push_back(std::move(m));
  }
}

const std::vector<std::size_t>& CoinvariantRing::basis_in_degree(int degree) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? kEmpty : it->second;
}

std::map<int, std::size_t> CoinvariantRing::graded_dims() const {
  std::map<int, std::size_t> d;
  for (const auto& [deg, idx] : by_degree_) d[deg] = idx.size();
  return d;
}

LaurentPoly CoinvariantRing::poincare() const {
  LaurentPoly p;
  for (const auto& [deg, idx] : by_degree_) p.add_term(deg, Rational(static_cast<long long>(idx.size())));
  return p;
}

const QVector& CoinvariantRing::monomial_normal_form(const Exponent& e) const {
  auto it = reductions_.find(e);
  if (it != reductions_.end()) return it->second;
  if (total_degree(e) <= n_ * (n_ - 1) / 2)
    throw std::logic_error("CoinvariantRing: missing reduction for " + monomial_to_string(e));
  return zero_coords_;
}

std::optional<int> CoinvariantRing::homogeneous_degree(const QVector& coords) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (d && *d != degrees_[i]) return std::nullopt;
    d = degrees_[i];
  }
  return d;
}

void CoinvariantRing::check(const CoinvariantElement& c) const {
  if (c.coords.size() != dim()) throw std::invalid_argument("CoinvariantElement: wrong ring");
}

CoinvariantElement CoinvariantRing::zero() const { return {QVector(dim()), std::nullopt}; }

CoinvariantElement CoinvariantRing::one() const { return basis_element(0); }

CoinvariantElement CoinvariantRing::basis_element(std::size_t i) const {
  CoinvariantElement c{QVector(dim()), degrees_.at(i)};
  c.coords[i] = 1;
  return c;
}

CoinvariantElement CoinvariantRing::variable(int i) const {
  return normal_form(MultiPoly::variable(n_, i));
}

CoinvariantElement CoinvariantRing::normal_form(const MultiPoly& p) const {
  if (p.nvars() != n_) throw std::invalid_argument("normal_form: variable count mismatch");
  QVector coords(dim());
  for (const auto& [e, c] : p.terms()) {
    const QVector& nf = monomial_normal_form(e);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!nf[i].is_zero()) Rational::fused_add_mul(coords[i], c, nf[i]);
  }
  auto deg = homogeneous_degree(coords);
  return {std::move(coords), deg};
}

MultiPoly CoinvariantRing::lift(const CoinvariantElement& c) const {
  check(c);
  MultiPoly p(n_);
  for (std::size_t i = 0; i < dim(); ++i) p.add_term(basis_[i], c.coords[i]);
  return p;
}

CoinvariantElement CoinvariantRing::add(const CoinvariantElement& a, const CoinvariantElement& b) const {
  check(a);
  check(b);
  QVector s = a.coords + b.coords;
  auto deg = homogeneous_degree(s);
  return {std::move(s), deg};
}

CoinvariantElement CoinvariantRing::scale(const Rational& s, const CoinvariantElement& a) const {
  check(a);
  QVector v = scaled(s, a.coords);
  auto deg = homogeneous_degree(v);
  return {std::move(v), deg};
}

CoinvariantElement CoinvariantRing::multiply(const CoinvariantElement& a,
                                             const CoinvariantElement& b) const {
  check(a);
  check(b);
  return normal_form(lift(a) * lift(b));
}

QMatrix CoinvariantRing::multiplication_matrix(const CoinvariantElement& c) const {
  check(c);
  QMatrix m(dim(), dim());
  MultiPoly lc = lift(c);
  for (std::size_t j = 0; j < dim(); ++j) {
    CoinvariantElement prod = normal_form(lc * MultiPoly::monomial(basis_[j]));
    for (std::size_t r = 0; r < dim(); ++r) m(r, j) = prod.coords[r];
  }
  return m;
}

CoinvariantElement CoinvariantRing::weyl_act(const WeylElement& w, const CoinvariantElement& c) const {
  if (w.rank() != n_) throw std::invalid_argument("weyl_act: rank mismatch");
  return normal_form(multipoly_perm_act(w.perm(), lift(c)));
}

QMatrix CoinvariantRing::weyl_matrix(const WeylElement& w) const {
  QMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    CoinvariantElement img = weyl_act(w, basis_element(j));
    for (std::size_t r = 0; r < dim(); ++r) m(r, j) = img.coords[r];
  }
  return m;
}

CoinvariantElement CoinvariantRing::demazure(int i, const CoinvariantElement& c) const {
  if (i < 1 || i >= n_) throw std::out_of_range("demazure: index out of range");
  return normal_form(lift(c).divided_difference(i));
}

std::vector<CoinvariantElement> CoinvariantRing::invariants_basis(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("invariants_basis: index out of range");
  QMatrix s = weyl_matrix(WeylElement::simple(n_, i));
  std::vector<CoinvariantElement> out;
  for (const auto& [deg, idx] : by_degree_) {
    // (1 - s) restricted to degree deg; s preserves degree.
    QMatrix m(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        m(r, c) = Rational(r == c ? 1 : 0) - s(idx[r], idx[c]);
    for (const QVector& k : kernel_basis(m)) {
      CoinvariantElement e{QVector(dim()), deg};
      for (std::size_t r = 0; r < idx.size(); ++r) e.coords[idx[r]] = k[r];
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool CoinvariantRing::is_invariant(int i, const CoinvariantElement& c) const {
  return weyl_act(WeylElement::simple(n_, i), c) == c;
}

std::vector<CoinvariantElement> CoinvariantRing::invariant_generators(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("invariant_generators: index out of range");
  std::vector<CoinvariantElement> gens;
  for (int j = 1; j <= n_; ++j)
    if (j != i && j != i + 1) gens.push_back(variable(j));
  MultiPoly xi = MultiPoly::variable(n_, i), xj = MultiPoly::variable(n_, i + 1);
  gens.push_back(normal_form(xi + xj));
  gens.push_back(normal_form(xi * xj));
  std::erase_if(gens, [](const CoinvariantElement& g) { return g.is_zero(); });
  return gens;
}

std::pair<CoinvariantElement, CoinvariantElement> CoinvariantRing::split_over_Cs(
    int i, const CoinvariantElement& c) const {
  CoinvariantElement b = demazure(i, c);
  CoinvariantElement a = add(c, scale(Rational(-1), multiply(variable(i), b)));
  return {std::move(a), std::move(b)};
}

std::string CoinvariantRing::to_string(const CoinvariantElement& c) const { return lift(c).to_string(); }

}  // namespace soergel
