#include "soergel/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace soergel::dual {
namespace {

std::vector<std::pair<WeylElement, int>> all_summands(const SoergelCategory& cat) {
  std::vector<std::pair<WeylElement, int>> out;
  for (const auto& w : all_elements(cat.rank(), cat.limits().max_rank)) out.emplace_back(w, 0);
  return out;
}

}  // namespace

// Graded projective F = sum P_{x_i}<d_i>, laid out summand by summand.
struct DualAlgebra::Module {
  std::vector<std::pair<std::size_t, int>> summands;
  std::vector<std::size_t> start;
  std::vector<int> degree;  // of each coordinate
  std::size_t dim = 0;
};

DualAlgebra::DualAlgebra(const SoergelCategory& cat)
    : rank_(cat.rank()),
      elements_(all_elements(cat.rank(), cat.limits().max_rank)),
      alg_(cat.endo_algebra(all_summands(cat))) {
  const auto& basis = alg_.basis();
  with_source_.resize(elements_.size());
  local_.resize(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].degree < 0) throw VerificationError("DualAlgebra: negative degree");
    if (basis[a].degree == 0 && a != alg_.idempotent(basis[a].source))
      throw VerificationError("DualAlgebra: degree 0 is not spanned by the idempotents");
    local_[a] = with_source_[basis[a].source].size();
    with_source_[basis[a].source].push_back(a);
  }
  mult_.assign(basis.size(), std::vector<SparseVec>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].target != basis[a].source) continue;
      QVector p = alg_.multiply(a, b);
      for (std::size_t c = 0; c < p.size(); ++c)
        if (!p[c].is_zero()) mult_[a][b].emplace_back(c, p[c]);
    }

  // A_+ = span(G) + A_+ A_+; then A_+ M = G M for every module M.
  RowSpace square(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[a].degree == 0 || basis[b].degree == 0 || mult_[a][b].empty()) continue;
      QVector v(basis.size());
      for (const auto& [c, x] : mult_[a][b]) v[c] = x;
      square.insert(std::move(v));
    }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return basis[x].degree < basis[y].degree; });
  for (std::size_t a : order) {
    if (basis[a].degree == 0) continue;
    QVector u(basis.size());
    u[a] = 1;
    if (square.insert(std::move(u))) rad_generators_.push_back(a);
  }
}

std::size_t DualAlgebra::index(const WeylElement& w) const {
  auto it = std::find(elements_.begin(), elements_.end(), w);
  if (it == elements_.end()) throw std::invalid_argument("DualAlgebra: element of the wrong rank");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::vector<std::size_t>> DualAlgebra::cartan() const {
  std::vector<std::vector<std::size_t>> c(elements_.size(), std::vector<std::size_t>(elements_.size()));
  for (const auto& b : alg_.basis()) ++c[b.source][b.target];
  return c;
}

LaurentPoly DualAlgebra::cartan_graded(std::size_t x, std::size_t y) const {
  LaurentPoly p;
  for (const auto& b : alg_.basis())
    if (b.source == x && b.target == y) p.add_term(b.degree, Rational(1));
  return p;
}

QMatrix DualAlgebra::inverse_cartan() const {
  auto c = cartan();
  QMatrix m(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = Rational(static_cast<long long>(c[i][j]));
  auto inv = inverse(m);
  if (!inv) throw VerificationError("DualAlgebra: Cartan matrix is singular");
  return *inv;
}

QVector DualAlgebra::act(std::size_t a, const Module& f, const QVector& v) const {
  QVector out(f.dim);
  for (std::size_t i = 0; i < f.summands.size(); ++i) {
    const auto& local = with_source_[f.summands[i].first];
    for (std::size_t p = 0; p < local.size(); ++p) {
      const Rational& c = v[f.start[i] + p];
      if (c.is_zero()) continue;
      for (const auto& [r, x] : mult_[a][local[p]]) Rational::fused_add_mul(out[f.start[i] + local_[r]], c, x);
    }
  }
  return out;
}

Resolution DualAlgebra::resolve(std::size_t x, std::size_t max_len) const {
  const auto& basis = alg_.basis();
  auto make = [&](std::vector<std::pair<std::size_t, int>> summands) {
    Module m;
    m.summands = std::move(summands);
    for (const auto& [y, d] : m.summands) {
      m.start.push_back(m.dim);
      for (std::size_t b : with_source_[y]) m.degree.push_back(basis[b].degree + d);
      m.dim += with_source_[y].size();
    }
    return m;
  };

  Resolution res;
  res.simple = x;
  Module f = make({{x, 0}});
  res.terms.push_back({f.summands});
  // Kernel of P_x -> L_x: everything of positive degree.
  std::map<int, std::vector<QVector>> ker;
  for (std::size_t p = 0; p < f.dim; ++p)
    if (f.degree[p] > 0) {
      QVector u(f.dim);
      u[p] = 1;
      ker[f.degree[p]].push_back(std::move(u));
    }

  while (!ker.empty() && res.terms.size() <= max_len) {
    // Minimal generators: complement of rad K = G K inside each e_y K_d.
    std::map<int, std::vector<QVector>> rad;
    for (const auto& [d, vs] : ker)
      for (std::size_t g : rad_generators_)
        for (const QVector& v : vs) {
          QVector w = act(g, f, v);
          if (!is_zero(w)) rad[d + basis[g].degree].push_back(std::move(w));
        }
    std::vector<std::pair<std::size_t, int>> gens;
    std::vector<QVector> images;
    for (const auto& [d, vs] : ker)
      for (std::size_t y = 0; y < elements_.size(); ++y) {
        const std::size_t e = alg_.idempotent(y);
        RowSpace span(f.dim);
        if (rad.contains(d))
          for (const QVector& r : rad.at(d)) span.insert(act(e, f, r));
        for (const QVector& v : vs) {
          QVector ev = act(e, f, v);
          if (is_zero(ev)) continue;
          if (span.insert(ev)) {
            gens.emplace_back(y, d);
            images.push_back(std::move(ev));
          }
        }
      }

    Module next = make(gens);
    res.terms.push_back({next.summands});
    // phi: next -> f, b in A e_y of summand i goes to b * m_i; kernel per degree.
    std::map<int, std::vector<std::size_t>> coords_by_degree;
    for (std::size_t p = 0; p < next.dim; ++p) coords_by_degree[next.degree[p]].push_back(p);
    std::map<int, std::vector<QVector>> next_ker;
    for (const auto& [d, coords] : coords_by_degree) {
      std::vector<QVector> cols;
      for (std::size_t p : coords) {
        const std::size_t i =
            static_cast<std::size_t>(std::upper_bound(next.start.begin(), next.start.end(), p) - next.start.begin()) - 1;
        const std::size_t b = with_source_[next.summands[i].first][p - next.start[i]];
        cols.push_back(act(b, f, images[i]));
      }
      for (const QVector& k : kernel_basis(QMatrix::from_columns(f.dim, cols))) {
        QVector v(next.dim);
        for (std::size_t j = 0; j < coords.size(); ++j) v[coords[j]] = k[j];
        next_ker[d].push_back(std::move(v));
      }
    }
    f = std::move(next);
    ker = std::move(next_ker);
  }
  res.complete = ker.empty();
  return res;
}

ExtDims DualAlgebra::ext_dims(const Resolution& r, std::size_t y, std::size_t k) {
  ExtDims e;
  if (k >= r.terms.size()) return e;
  for (const auto& [z, d] : r.terms[k].summands)
    if (z == y) {
      ++e.dim;
      ++e.graded[2 * d];
    }
  return e;
}

KoszulReport koszulity_check(const DualAlgebra& a, std::size_t max_len) {
  KoszulReport rep;
  for (std::size_t x = 0; x < a.elements().size(); ++x) {
    Resolution r = a.resolve(x, max_len);
    rep.complete = rep.complete && r.complete;
    for (std::size_t k = 0; k < r.terms.size(); ++k)
      for (std::size_t y = 0; y < a.elements().size(); ++y) {
        ExtDims e = DualAlgebra::ext_dims(r, y, k);
        if (e.dim) rep.max_k = std::max(rep.max_k, static_cast<int>(k));
        for (const auto& [deg, n] : e.graded)
          if (deg != 2 * static_cast<int>(k)) rep.koszul = false;
      }
  }
  rep.koszul = rep.koszul && rep.complete;
  return rep;
}

}  // namespace soergel::dual
