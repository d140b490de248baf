#include "soergel/graded_module.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace soergel {
namespace {

QMatrix power_product(const std::vector<QMatrix>& xs, const Exponent& e, std::size_t dim) {
  QMatrix m = QMatrix::identity(dim);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) m = xs[i] * m;
  return m;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Rank of a sparse system, after splitting it into connected blocks of unknowns.
std::size_t sparse_rank(std::size_t nvars, const std::vector<std::vector<std::pair<std::size_t, Rational>>>& eqs) {
  std::vector<std::size_t> parent(nvars);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& eq : eqs)
    for (std::size_t k = 1; k < eq.size(); ++k)
      parent[find_root(parent, eq[k].first)] = find_root(parent, eq[0].first);
  std::map<std::size_t, std::vector<std::size_t>> comp_vars;
  for (std::size_t v = 0; v < nvars; ++v) comp_vars[find_root(parent, v)].push_back(v);
  std::map<std::size_t, std::vector<const std::vector<std::pair<std::size_t, Rational>>*>> comp_eqs;
  for (const auto& eq : eqs)
    if (!eq.empty()) comp_eqs[find_root(parent, eq[0].first)].push_back(&eq);
  std::size_t total = 0;
  for (const auto& [root, list] : comp_eqs) {
    const auto& vars = comp_vars[root];
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < vars.size(); ++i) local.emplace(vars[i], i);
    RowSpace rs(vars.size());
    for (const auto* eq : list) {
      QVector row(vars.size());
      for (const auto& [v, c] : *eq) row[local.at(v)] += c;
      rs.insert(std::move(row));
      if (rs.rank() == vars.size()) break;
    }
    total += rs.rank();
  }
  return total;
}

}  // namespace

GradedModule::GradedModule(int n, std::vector<int> degrees, std::vector<QMatrix> actions)
    : n_(n), degrees_(std::move(degrees)), actions_(std::move(actions)) {
  if (!std::is_sorted(degrees_.begin(), degrees_.end()))
    throw std::invalid_argument("GradedModule: basis must be sorted by degree");
  if (actions_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("GradedModule: need one action matrix per variable");
  for (const auto& a : actions_)
    if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("GradedModule: action shape mismatch");
}

std::size_t GradedModule::offset(int d) const {
  return static_cast<std::size_t>(std::lower_bound(degrees_.begin(), degrees_.end(), d) - degrees_.begin());
}

std::size_t GradedModule::dim(int d) const {
  auto [lo, hi] = std::equal_range(degrees_.begin(), degrees_.end(), d);
  return static_cast<std::size_t>(hi - lo);
}

std::map<int, std::size_t> GradedModule::graded_dims() const {
  std::map<int, std::size_t> out;
  for (int d : degrees_) ++out[d];
  return out;
}

void GradedModule::validate() const {
  const std::size_t D = dim();
  for (const auto& a : actions_)
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c)
        if (!a(r, c).is_zero() && degrees_[r] != degrees_[c] + 2)
          throw std::logic_error("GradedModule: action does not raise degree by 2");
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t j = i + 1; j < actions_.size(); ++j)
      if (actions_[i] * actions_[j] != actions_[j] * actions_[i])
        throw std::logic_error("GradedModule: actions do not commute");
  // prod_i (1 + t x_i) = sum_k t^k e_k(x)
  std::vector<QMatrix> e(static_cast<std::size_t>(n_) + 1, QMatrix(D, D));
  e[0] = QMatrix::identity(D);
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += actions_[i] * e[k - 1];
  for (std::size_t k = 1; k < e.size(); ++k)
    if (!e[k].is_zero())
      throw std::logic_error("GradedModule: e_" + std::to_string(k) + " does not act by zero");
}

LaurentPoly character(const GradedModule& m) {
  LaurentPoly p;
  for (const auto& [d, k] : m.graded_dims()) p.add_term(d, Rational(static_cast<long long>(k)));
  return p;
}

GradedModule shift(const GradedModule& m, int k) {
  std::vector<int> deg = m.degrees();
  for (int& d : deg) d -= k;
  return GradedModule(m.rank(), std::move(deg), m.actions());
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("direct_sum: rank mismatch");
  // Merge by degree, remembering where each old basis vector lands.
  std::vector<std::pair<int, std::size_t>> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.emplace_back(a.degree(i), i);
  for (std::size_t i = 0; i < b.dim(); ++i) all.emplace_back(b.degree(i), a.dim() + i);
  std::stable_sort(all.begin(), all.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<std::size_t> pos(all.size());
  std::vector<int> deg;
  for (std::size_t i = 0; i < all.size(); ++i) {
    pos[all[i].second] = i;
    deg.push_back(all[i].first);
  }
  std::vector<QMatrix> acts;
  for (int x = 1; x <= a.rank(); ++x) {
    QMatrix m(all.size(), all.size());
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) m(pos[r], pos[c]) = a.action(x)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) m(pos[a.dim() + r], pos[a.dim() + c]) = b.action(x)(r, c);
    acts.push_back(std::move(m));
  }
  return GradedModule(a.rank(), std::move(deg), std::move(acts));
}

QMatrix evaluate_action(const GradedModule& m, const MultiPoly& p) {
  if (p.nvars() != m.rank()) throw std::invalid_argument("evaluate_action: variable count mismatch");
  QMatrix out(m.dim(), m.dim());
  for (const auto& [e, c] : p.terms()) out += c * power_product(m.actions(), e, m.dim());
  return out;
}

std::vector<QMatrix> monomial_actions(const CoinvariantRing& ring, const GradedModule& m) {
  std::vector<QMatrix> out;
  out.reserve(ring.dim());
  for (const Exponent& e : ring.basis()) out.push_back(power_product(m.actions(), e, m.dim()));
  return out;
}

bool is_homomorphism(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f) {
  if (f.matrix.rows() != tgt.dim() || f.matrix.cols() != src.dim()) return false;
  for (std::size_t r = 0; r < tgt.dim(); ++r)
    for (std::size_t c = 0; c < src.dim(); ++c)
      if (!f.matrix(r, c).is_zero() && tgt.degree(r) != src.degree(c) + f.degree) return false;
  for (int i = 1; i <= src.rank(); ++i)
    if (tgt.action(i) * f.matrix != f.matrix * src.action(i)) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return {g.degree + f.degree, g.matrix * f.matrix}; }

ModuleMap identity_map(const GradedModule& m) { return {0, QMatrix::identity(m.dim())}; }

Submodule restrict_to(const GradedModule& ambient, const std::vector<QVector>& basis) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::optional<int> d;
    for (std::size_t r = 0; r < ambient.dim(); ++r) {
      if (basis[k][r].is_zero()) continue;
      if (d && *d != ambient.degree(r)) throw std::invalid_argument("restrict_to: basis vector not homogeneous");
      d = ambient.degree(r);
    }
    if (!d) throw std::invalid_argument("restrict_to: zero basis vector");
    order.emplace_back(*d, k);
  }
  std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<QVector> cols;
  std::vector<int> deg;
  for (const auto& [d, k] : order) {
    cols.push_back(basis[k]);
    deg.push_back(d);
  }
  Submodule sub;
  sub.inclusion = QMatrix::from_columns(ambient.dim(), cols);
  const std::size_t k = cols.size();
  RrefResult rt = rref(sub.inclusion.transpose());
  if (rt.rank != k) throw std::invalid_argument("restrict_to: basis is not independent");
  QMatrix square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square(i, j) = sub.inclusion(rt.pivots[i], j);
  QMatrix inv = *inverse(square);
  sub.retraction = QMatrix(k, ambient.dim());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub.retraction(i, rt.pivots[j]) = inv(i, j);
  std::vector<QMatrix> acts;
  for (int x = 1; x <= ambient.rank(); ++x) {
    QMatrix image = ambient.action(x) * sub.inclusion;
    QMatrix a = sub.retraction * image;
    if (sub.inclusion * a != image) throw std::invalid_argument("restrict_to: span is not a submodule");
    acts.push_back(std::move(a));
  }
  sub.module = GradedModule(ambient.rank(), std::move(deg), std::move(acts));
  return sub;
}

Presentation::Presentation(const CoinvariantRing& ring, const GradedModule& m) : ring_(&ring), m_(m) {
  if (ring.rank() != m.rank()) throw std::invalid_argument("Presentation: rank mismatch");
  const auto gd = m.graded_dims();
  for (const auto& [d, k] : gd) {
    const std::size_t off = m.offset(d);
    RowSpace span(k);
    if (m.dim(d - 2) > 0) {
      const std::size_t src = m.offset(d - 2), ns = m.dim(d - 2);
      for (int i = 1; i <= m.rank(); ++i)
        for (std::size_t c = 0; c < ns; ++c) {
          QVector col(k);
          for (std::size_t r = 0; r < k; ++r) col[r] = m.action(i)(off + r, src + c);
          span.insert(std::move(col));
        }
    }
    for (std::size_t b = 0; b < k && span.rank() < k; ++b) {
      QVector unit(k);
      unit[b] = 1;
      if (span.insert(std::move(unit))) gens_.push_back(off + b);
    }
  }

  std::vector<QMatrix> mon = monomial_actions(ring, m);
  // Free module basis (ring index a, generator position g), grouped by degree.
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> free_by_degree;
  for (std::size_t g = 0; g < gens_.size(); ++g)
    for (std::size_t a = 0; a < ring.dim(); ++a)
      free_by_degree[ring.degree(a) + m.degree(gens_[g])].emplace_back(a, g);

  section_.resize(m.dim());
  for (const auto& [d, cols] : free_by_degree) {
    const std::size_t off = m.offset(d), k = m.dim(d);
    QMatrix pi(k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto [a, g] = cols[j];
      for (std::size_t r = 0; r < k; ++r) pi(r, j) = mon[a](off + r, gens_[g]);
    }
    for (const QVector& rel : kernel_basis(pi)) {
      Relation R{d, {}};
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!rel[j].is_zero()) R.terms.emplace_back(cols[j].first, cols[j].second, rel[j]);
      relations_.push_back(std::move(R));
    }
    if (k == 0) continue;
    auto sec = solve_matrix(pi, QMatrix::identity(k));
    if (!sec) throw std::logic_error("Presentation: generators do not span the module");
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!(*sec)(j, b).is_zero()) section_[off + b].emplace_back(cols[j].first, cols[j].second, (*sec)(j, b));
  }
  for (const auto& [d, k] : gd)
    if (!free_by_degree.contains(d)) throw std::logic_error("Presentation: degree not generated");
}

QMatrix Presentation::system(const GradedModule& n, int d, std::vector<std::size_t>& unknown_offsets) const {
  unknown_offsets.assign(gens_.size() + 1, 0);
  for (std::size_t g = 0; g < gens_.size(); ++g)
    unknown_offsets[g + 1] = unknown_offsets[g] + n.dim(m_.degree(gens_[g]) + d);
  const std::size_t nunk = unknown_offsets.back();
  std::vector<QMatrix> mon = monomial_actions(*ring_, n);
  std::vector<QVector> rows;
  for (const Relation& rel : relations_) {
    const int td = rel.degree + d;
    const std::size_t k = n.dim(td), roff = n.offset(td);
    if (k == 0) continue;
    QMatrix block(k, nunk);
    for (const auto& [a, g, c] : rel.terms) {
      const int gd = m_.degree(gens_[g]) + d;
      const std::size_t coff = n.offset(gd), nc = n.dim(gd);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < nc; ++j) {
          const Rational& x = mon[a](roff + r, coff + j);
          if (!x.is_zero()) Rational::fused_add_mul(block(r, unknown_offsets[g] + j), c, x);
        }
    }
    for (std::size_t r = 0; r < k; ++r) rows.push_back(block.row(r));
  }
  QMatrix sys(rows.size(), nunk);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < nunk; ++j) sys(r, j) = rows[r][j];
  return sys;
}

std::vector<ModuleMap> Presentation::hom(const GradedModule& n, int d) const {
  if (n.rank() != m_.rank()) throw std::invalid_argument("hom: rank mismatch");
  std::vector<std::size_t> uoff;
  QMatrix sys = system(n, d, uoff);
  std::vector<ModuleMap> out;
  if (uoff.back() == 0) return out;
  std::vector<QMatrix> mon = monomial_actions(*ring_, n);
  for (const QVector& sol : kernel_basis(sys)) {
    // phi(g) as a vector of N.
    std::vector<QVector> phi(gens_.size(), QVector(n.dim()));
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const std::size_t off = n.offset(m_.degree(gens_[g]) + d);
      for (std::size_t j = uoff[g]; j < uoff[g + 1]; ++j) phi[g][off + j - uoff[g]] = sol[j];
    }
    ModuleMap f{d, QMatrix(n.dim(), m_.dim())};
    for (std::size_t b = 0; b < m_.dim(); ++b) {
      QVector col(n.dim());
      for (const auto& [a, g, c] : section_[b]) {
        QVector img = mon[a] * phi[g];
        for (std::size_t r = 0; r < n.dim(); ++r)
          if (!img[r].is_zero()) Rational::fused_add_mul(col[r], c, img[r]);
      }
      for (std::size_t r = 0; r < n.dim(); ++r) f.matrix(r, b) = col[r];
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t Presentation::hom_dim(const GradedModule& n, int d) const {
  std::vector<std::size_t> uoff;
  QMatrix sys = system(n, d, uoff);
  return uoff.back() - rank(sys);
}

std::vector<ModuleMap> hom_graded(const CoinvariantRing& ring, const GradedModule& m, const GradedModule& n,
                                  int d) {
  return Presentation(ring, m).hom(n, d);
}

LaurentPoly hom_character(const CoinvariantRing& ring, const GradedModule& m, const GradedModule& n) {
  LaurentPoly p;
  if (m.dim() == 0 || n.dim() == 0) return p;
  Presentation pres(ring, m);
  for (int d = n.min_degree() - m.max_degree(); d <= n.max_degree() - m.min_degree(); ++d) {
    std::size_t k = pres.hom_dim(n, d);
    if (k) p.add_term(d, Rational(static_cast<long long>(k)));
  }
  return p;
}

namespace {

// Commutation equations x_i F = F x_i over the unknown entries selected by `use`.
template <class Use>
std::size_t commutation_dim(const GradedModule& m, const GradedModule& n, Use use) {
  if (m.rank() != n.rank()) throw std::invalid_argument("hom: rank mismatch");
  const std::size_t R = n.dim(), C = m.dim();
  std::vector<std::ptrdiff_t> var(R * C, -1);
  std::size_t nvars = 0;
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (use(r, c)) var[r * C + c] = static_cast<std::ptrdiff_t>(nvars++);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> eqs;
  for (int i = 1; i <= m.rank(); ++i) {
    const QMatrix& xn = n.action(i);
    const QMatrix& xm = m.action(i);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c) {
        // (xn F - F xm)(r, c)
        std::map<std::size_t, Rational> eq;
        for (std::size_t k = 0; k < R; ++k)
          if (!xn(r, k).is_zero() && var[k * C + c] >= 0) eq[std::size_t(var[k * C + c])] += xn(r, k);
        for (std::size_t k = 0; k < C; ++k)
          if (!xm(k, c).is_zero() && var[r * C + k] >= 0) eq[std::size_t(var[r * C + k])] -= xm(k, c);
        std::vector<std::pair<std::size_t, Rational>> row;
        for (auto& [v, x] : eq)
          if (!x.is_zero()) row.emplace_back(v, x);
        if (!row.empty()) eqs.push_back(std::move(row));
      }
  }
  return nvars - sparse_rank(nvars, eqs);
}

}  // namespace

std::size_t hom_dim_bruteforce(const GradedModule& m, const GradedModule& n, int d) {
  return commutation_dim(m, n, [&](std::size_t r, std::size_t c) { return n.degree(r) == m.degree(c) + d; });
}

std::size_t hom_dim_ungraded(const GradedModule& m, const GradedModule& n) {
  return commutation_dim(m, n, [](std::size_t, std::size_t) { return true; });
}

}  // namespace soergel
