#include "soergel/soergel.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace soergel {

std::map<std::pair<WeylElement, int>, int> Decomposition::multiset() const {
  std::map<std::pair<WeylElement, int>, int> out;
  for (const auto& s : summands) ++out[{s.w, s.shift}];
  return out;
}

std::map<std::pair<WeylElement, int>, int> expected_summands(const std::map<WeylElement, LaurentPoly>& kl) {
  std::map<std::pair<WeylElement, int>, int> out;
  for (const auto& [x, m] : kl)
    for (const auto& [e, c] : m.terms()) {
      if (!c.is_integer() || c.sign() < 0)
        throw VerificationError("expected_summands: coefficient " + c.to_string() + " is not a multiplicity");
      out[{x, -e}] += static_cast<int>(c.to_int64());
    }
  return out;
}

// Current remainder during a decomposition, with maps to and from the original module.
struct SoergelCategory::Piece {
  GradedModule module;
  QMatrix incl;  // original.dim() x module.dim()
  QMatrix proj;  // module.dim() x original.dim()
};

SoergelCategory::SoergelCategory(int n, Limits limits)
    : n_(n), limits_(limits), ring_(n, limits.max_rank), hecke_(n, limits.max_rank) {
  for (int i = 1; i < n; ++i) gens_.push_back(ring_.invariant_generators(i));
  for (std::size_t a = 0; a < ring_.dim(); ++a) ring_mult_.push_back(ring_.multiplication_matrix(ring_.basis_element(a)));
}

void SoergelCategory::check_dim(std::size_t d, const char* what) const {
  if (d > limits_.max_dim)
    throw SizeLimitError(std::string(what) + ": intermediate dimension " + std::to_string(d) +
                         " exceeds SOERGEL_MAX_DIM=" + std::to_string(limits_.max_dim));
}

GradedModule SoergelCategory::trivial_module() const {
  return GradedModule(n_, {0}, std::vector<QMatrix>(static_cast<std::size_t>(n_), QMatrix(1, 1)));
}

GradedModule SoergelCategory::regular_module() const {
  std::vector<int> deg;
  for (std::size_t a = 0; a < ring_.dim(); ++a) deg.push_back(ring_.degree(a));
  std::vector<QMatrix> acts;
  for (int i = 1; i <= n_; ++i) acts.push_back(ring_.x_action(i));
  return GradedModule(n_, std::move(deg), std::move(acts));
}

GradedModule SoergelCategory::induct(int i, const GradedModule& m) const {
  if (m.rank() != n_) throw std::invalid_argument("induct: rank mismatch");
  if (i < 1 || i >= n_) throw std::out_of_range("induct: index out of range");
  const std::size_t dc = ring_.dim(), dm = m.dim();
  check_dim(dc * dm, "induct");

  // Tensor basis (a, b) -> a * dm + b, grouped by degree.
  std::map<int, std::vector<std::size_t>> by_degree;
  std::vector<std::size_t> pos(dc * dm);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t b = 0; b < dm; ++b) {
      auto& list = by_degree[ring_.degree(a) + m.degree(b)];
      pos[a * dm + b] = list.size();
      list.push_back(a * dm + b);
    }
  std::map<int, RowSpace> rel;
  for (const auto& [d, list] : by_degree) rel.emplace(d, RowSpace(list.size()));

  // c f (x) m - c (x) f m for each generator f of C^s.
  for (const CoinvariantElement& f : gens_[static_cast<std::size_t>(i - 1)]) {
    const QMatrix fc = ring_.multiplication_matrix(f);
    const QMatrix fm = evaluate_action(m, ring_.lift(f));
    for (std::size_t a = 0; a < dc; ++a)
      for (std::size_t b = 0; b < dm; ++b) {
        const int d = ring_.degree(a) + *f.degree + m.degree(b);
        auto it = rel.find(d);
        if (it == rel.end()) continue;
        QVector row(it->second.dim());
        for (std::size_t a2 = 0; a2 < dc; ++a2)
          if (!fc(a2, a).is_zero()) row[pos[a2 * dm + b]] += fc(a2, a);
        for (std::size_t b2 = 0; b2 < dm; ++b2)
          if (!fm(b2, b).is_zero()) row[pos[a * dm + b2]] -= fm(b2, b);
        it->second.insert(std::move(row));
      }
  }

  // Quotient basis: non-pivot columns of each degree block.
  std::vector<int> degrees;
  std::map<int, std::vector<std::size_t>> free_cols;  // degree -> block positions
  std::map<int, std::size_t> first_index;
  for (const auto& [d, list] : by_degree) {
    const RowSpace& rs = rel.at(d);
    std::vector<bool> pivot(list.size(), false);
    for (std::size_t p : rs.pivots()) pivot[p] = true;
    first_index[d] = degrees.size();
    for (std::size_t c = 0; c < list.size(); ++c)
      if (!pivot[c]) {
        free_cols[d].push_back(c);
        degrees.push_back(d - 1);
      }
  }
  const std::size_t dq = degrees.size();
  if (dq != 2 * dm)
    throw VerificationError("induct: quotient has dimension " + std::to_string(dq) + ", expected " +
                            std::to_string(2 * dm));

  std::vector<QMatrix> acts(static_cast<std::size_t>(n_), QMatrix(dq, dq));
  for (const auto& [d, cols] : free_cols) {
    auto target = by_degree.find(d + 2);
    if (target == by_degree.end() || !free_cols.contains(d + 2)) continue;
    const RowSpace& rs = rel.at(d + 2);
    const auto& tcols = free_cols.at(d + 2);
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const std::size_t t = by_degree.at(d)[cols[q]];
      const std::size_t a = t / dm, b = t % dm;
      for (int j = 1; j <= n_; ++j) {
        QVector v(rs.dim());
        const QMatrix& xj = ring_.x_action(j);
        for (std::size_t a2 = 0; a2 < dc; ++a2)
          if (!xj(a2, a).is_zero()) v[pos[a2 * dm + b]] = xj(a2, a);
        rs.reduce(v);
        for (std::size_t k = 0; k < tcols.size(); ++k)
          acts[static_cast<std::size_t>(j - 1)](first_index.at(d + 2) + k, first_index.at(d) + q) = v[tcols[k]];
      }
    }
  }
  return GradedModule(n_, std::move(degrees), std::move(acts));
}

GradedModule SoergelCategory::bott_samelson(const Word& word) const {
  if (word.n != n_) throw std::invalid_argument("bott_samelson: rank mismatch");
  GradedModule m = trivial_module();
  for (int s : word.letters) m = induct(s, m);
  return m;
}

std::vector<ModuleMap> SoergelCategory::hom_graded(const GradedModule& m, const GradedModule& n, int d) const {
  return soergel::hom_graded(ring_, m, n, d);
}

LaurentPoly SoergelCategory::hom_character(const GradedModule& m, const GradedModule& n) const {
  return soergel::hom_character(ring_, m, n);
}

bool SoergelCategory::split_one(Piece& cur, const WeylElement& x, int k, Decomposition& out) const {
  if (cur.module.dim() == 0) return false;
  const GradedModule d = shift(indecomposable(x), k);
  if (d.min_degree() < cur.module.min_degree() || d.max_degree() > cur.module.max_degree()) return false;
  std::vector<ModuleMap> js = soergel::hom_graded(ring_, d, cur.module, 0);
  if (js.empty()) return false;
  std::vector<ModuleMap> ps = soergel::hom_graded(ring_, cur.module, d, 0);
  for (const ModuleMap& p : ps)
    for (const ModuleMap& j : js) {
      QMatrix pj = p.matrix * j.matrix;
      Rational lambda = pj(0, 0);
      if (pj != lambda * QMatrix::identity(d.dim()))
        throw VerificationError("decompose: End(D_" + x.to_string() + ")_0 is not scalar");
      if (lambda.is_zero()) continue;

      QMatrix pm = (Rational(1) / lambda) * p.matrix;
      const QMatrix& jm = j.matrix;
      Summand s{x, k, {0, cur.incl * jm}, {0, pm * cur.proj}};
      std::vector<QVector> ker = kernel_basis(pm);
      Piece next;
      if (ker.empty()) {
        next.module = GradedModule(n_, {}, std::vector<QMatrix>(static_cast<std::size_t>(n_), QMatrix(0, 0)));
        next.incl = QMatrix(cur.incl.rows(), 0);
        next.proj = QMatrix(0, cur.proj.cols());
      } else {
        Submodule sub = restrict_to(cur.module, ker);
        next.incl = cur.incl * sub.inclusion;
        next.proj = sub.retraction * (QMatrix::identity(cur.module.dim()) - jm * pm) * cur.proj;
        next.module = std::move(sub.module);
      }
      out.summands.push_back(std::move(s));
      cur = std::move(next);
      return true;
    }
  return false;
}

namespace {

void verify_decomposition(const GradedModule& m, const Decomposition& dec) {
  QMatrix sum(m.dim(), m.dim());
  for (std::size_t a = 0; a < dec.summands.size(); ++a) {
    const auto& sa = dec.summands[a];
    sum += sa.inclusion.matrix * sa.projection.matrix;
    for (std::size_t b = 0; b < dec.summands.size(); ++b) {
      QMatrix pj = sa.projection.matrix * dec.summands[b].inclusion.matrix;
      bool ok = a == b ? pj == QMatrix::identity(pj.rows()) : pj.is_zero();
      if (!ok) throw VerificationError("decompose: split idempotents are not orthogonal");
    }
  }
  if (sum != QMatrix::identity(m.dim())) throw VerificationError("decompose: idempotents do not sum to 1");
}

}  // namespace

Decomposition SoergelCategory::decompose(const GradedModule& m,
                                         const std::map<std::pair<WeylElement, int>, int>& expected) const {
  Decomposition dec;
  Piece cur{m, QMatrix::identity(m.dim()), QMatrix::identity(m.dim())};
  std::vector<std::pair<std::pair<WeylElement, int>, int>> order(expected.begin(), expected.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first.first.length() > b.first.first.length(); });
  for (const auto& [key, mult] : order)
    for (int c = 0; c < mult; ++c)
      if (!split_one(cur, key.first, key.second, dec))
        throw VerificationError("decompose: no splitting found for D_" + key.first.to_string() + "<" +
                                std::to_string(key.second) + ">");
  if (cur.module.dim() != 0)
    throw VerificationError("decompose: remainder of dimension " + std::to_string(cur.module.dim()));
  verify_decomposition(m, dec);
  return dec;
}

Decomposition SoergelCategory::decompose_bs(const Word& word) const {
  GradedModule m = bott_samelson(word);
  return decompose(m, expected_summands(hecke_.kl_expand(hecke_.product_bs(word))));
}

Decomposition SoergelCategory::decompose_search(const GradedModule& m) const {
  Decomposition dec;
  Piece cur{m, QMatrix::identity(m.dim()), QMatrix::identity(m.dim())};
  const auto& els = hecke_.group().elements();
  for (auto it = els.rbegin(); it != els.rend() && cur.module.dim() > 0; ++it) {
    const int l = it->length();
    for (int k = -l - cur.module.max_degree(); k <= l - cur.module.min_degree(); ++k)
      while (split_one(cur, *it, k, dec)) {
      }
  }
  if (cur.module.dim() != 0)
    throw VerificationError("decompose: module is not a sum of shifted D_w");
  verify_decomposition(m, dec);
  return dec;
}

const GradedModule& SoergelCategory::indecomposable(const WeylElement& w) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(w); it != cache_.end()) return *it->second;
  }
  if (w.rank() != n_) throw std::invalid_argument("indecomposable: rank mismatch");
  GradedModule result;
  if (w.is_identity()) {
    result = trivial_module();
  } else {
    Word word = reduced_word(w);
    GradedModule bs = bott_samelson(word);
    auto expected = expected_summands(hecke_.kl_expand(hecke_.product_bs(word)));
    auto top = expected.find({w, 0});
    if (top == expected.end() || top->second != 1)
      throw VerificationError("indecomposable: b_w does not occur once in the product");
    expected.erase(top);
    Decomposition dec;
    Piece cur{bs, QMatrix::identity(bs.dim()), QMatrix::identity(bs.dim())};
    for (const auto& [key, mult] : expected)
      for (int c = 0; c < mult; ++c)
        if (!split_one(cur, key.first, key.second, dec))
          throw VerificationError("indecomposable: cannot split D_" + key.first.to_string() + " off BS(" +
                                  word.to_string() + ")");
    result = std::move(cur.module);
    if (character(result) != hecke_.character(hecke_.kl_basis(w)))
      throw VerificationError("indecomposable: character of D_" + w.to_string() + " disagrees with b_w");
    if (soergel::hom_graded(ring_, result, result, 0).size() != 1)
      throw VerificationError("indecomposable: End(D_" + w.to_string() + ")_0 is not one-dimensional");
  }
  result.validate();
  std::unique_lock lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(w, std::make_shared<const GradedModule>(std::move(result)));
  return *it->second;
}

HeckeElement SoergelCategory::hecke_class(const Decomposition& d) const {
  HeckeElement h(n_);
  for (const auto& s : d.summands) h += LaurentPoly::monomial(-s.shift) * hecke_.kl_basis(s.w);
  return h;
}

HeckeElement SoergelCategory::hecke_class(const GradedModule& m) const { return hecke_class(decompose_search(m)); }

EndoAlgebra SoergelCategory::endo_algebra(const std::vector<std::pair<WeylElement, int>>& summands) const {
  if (summands.empty()) throw std::invalid_argument("endo_algebra: empty summand list");
  std::vector<GradedModule> mods;
  for (const auto& [w, k] : summands) mods.push_back(shift(indecomposable(w), k));
  std::vector<EndoBasisElement> basis;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    Presentation pres(ring_, mods[i]);
    for (std::size_t j = 0; j < mods.size(); ++j)
      for (int d = mods[j].min_degree() - mods[i].max_degree(); d <= mods[j].max_degree() - mods[i].min_degree();
           ++d) {
        std::vector<ModuleMap> maps = pres.hom(mods[j], d);
        if (i == j && d == 0) {
          if (maps.size() != 1) throw VerificationError("endo_algebra: degree-0 endomorphisms are not scalars");
          maps[0] = identity_map(mods[i]);
        }
        for (auto& f : maps) basis.push_back({i, j, d, std::move(f)});
      }
  }
  return EndoAlgebra(summands, std::move(mods), std::move(basis));
}

EndoAlgebra::EndoAlgebra(std::vector<std::pair<WeylElement, int>> summands, std::vector<GradedModule> modules,
                         std::vector<EndoBasisElement> basis)
    : summands_(std::move(summands)), modules_(std::move(modules)), basis_(std::move(basis)) {
  idempotents_.assign(modules_.size(), basis_.size());
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    const auto& b = basis_[a];
    blocks_[{b.source, b.target, b.degree}].push_back(a);
    if (b.source == b.target && b.degree == 0 && b.map.matrix == QMatrix::identity(modules_[b.source].dim()))
      idempotents_[b.source] = a;
  }
  for (std::size_t i = 0; i < modules_.size(); ++i)
    if (idempotents_[i] == basis_.size()) throw std::invalid_argument("EndoAlgebra: missing identity of summand");
}

std::map<int, std::size_t> EndoAlgebra::graded_dims() const {
  std::map<int, std::size_t> out;
  for (const auto& b : basis_) ++out[b.degree];
  return out;
}

std::vector<std::size_t> EndoAlgebra::block(std::size_t source, std::size_t target, int degree) const {
  auto it = blocks_.find({source, target, degree});
  return it == blocks_.end() ? std::vector<std::size_t>{} : it->second;
}

QVector EndoAlgebra::coordinates(std::size_t source, std::size_t target, const ModuleMap& f) const {
  QVector out(basis_.size());
  std::vector<std::size_t> idx = block(source, target, f.degree);
  if (idx.empty()) {
    if (!f.matrix.is_zero()) throw VerificationError("EndoAlgebra: map outside the algebra");
    return out;
  }
  std::vector<QVector> cols;
  for (std::size_t a : idx) cols.push_back(basis_[a].map.matrix.flat());
  auto x = solve(QMatrix::from_columns(f.matrix.flat().size(), cols), f.matrix.flat());
  if (!x) throw VerificationError("EndoAlgebra: map outside the algebra");
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*x)[k];
  return out;
}

QVector EndoAlgebra::multiply(std::size_t a, std::size_t b) const {
  const auto& ea = basis_[a];
  const auto& eb = basis_[b];
  if (eb.target != ea.source) return QVector(basis_.size());
  return coordinates(eb.source, ea.target, compose(ea.map, eb.map));
}

std::vector<std::vector<QVector>> EndoAlgebra::structure_constants() const {
  std::vector<std::vector<QVector>> t(basis_.size(), std::vector<QVector>(basis_.size()));
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = 0; b < basis_.size(); ++b) t[a][b] = multiply(a, b);
  return t;
}

}  // namespace soergel
