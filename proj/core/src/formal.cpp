#include "soergel/formal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace soergel::formal {
namespace {

// Flattened layout of a family of blocks (c, target, source), each of size rows x cols.
class BlockLayout {
 public:
  void add(int c, std::size_t t, std::size_t s, std::size_t rows, std::size_t cols) {
    offsets_[{c, t, s}] = {size_, cols};
    size_ += rows * cols;
  }
  [[nodiscard]] std::size_t size() const { return size_; }
  // v[block] += m
  void accumulate(QVector& v, int c, std::size_t t, std::size_t s, const QMatrix& m, bool negate) const {
    const auto [off, cols] = offsets_.at({c, t, s});
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(r, j);
        if (x.is_zero()) continue;
        if (negate)
          v[off + r * cols + j] -= x;
        else
          v[off + r * cols + j] += x;
      }
  }

 private:
  std::map<std::tuple<int, std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> offsets_;
  std::size_t size_ = 0;
};

const std::vector<Generator>& term(const FormalComplex& x, int c) {
  static const std::vector<Generator> empty;
  auto it = x.terms.find(c);
  return it == x.terms.end() ? empty : it->second;
}

}  // namespace

std::string side_name(Side s) {
  switch (s) {
    case Side::kMix: return "MIX";
    case Side::kK: return "K";
    case Side::kPervGr: return "PERV_GR";
    case Side::kPerv: return "PERV";
  }
  return "?";
}

bool is_graded(Side s) { return s == Side::kMix || s == Side::kPervGr; }

FormalObject FormalComplex::object(int c) const { return {side, term(*this, c)}; }

std::size_t FormalComplex::generator_count() const {
  std::size_t n = 0;
  for (const auto& [c, t] : terms) n += t.size();
  return n;
}

FormalComplex stalk(Side side, const Generator& g, int c) {
  if (is_graded(side) != g.n.has_value()) throw std::invalid_argument("stalk: twist label does not match side");
  FormalComplex x;
  x.side = side;
  x.terms[c] = {g};
  return x;
}

FormalComplex twist(const FormalComplex& x, int k) {
  if (!is_graded(x.side)) throw std::invalid_argument("twist: side has no twist labels");
  FormalComplex out = x;
  for (auto& [c, t] : out.terms)
    for (auto& g : t) *g.n += k;
  return out;
}

FormalComplex gkos(const FormalComplex& x) {
  if (x.side != Side::kMix) throw std::invalid_argument("gkos: expects a MIX complex");
  FormalComplex out = x;
  out.side = Side::kPervGr;
  return out;
}

FormalComplex kos_formal(const FormalComplex& x) {
  if (x.side != Side::kK) throw std::invalid_argument("kos_formal: expects a K complex");
  FormalComplex out = x;
  out.side = Side::kPerv;
  return out;
}

FormalCategory::FormalCategory(int n, Limits limits) : cat_(n, limits), elements_(all_elements(n, limits.max_rank)) {}

int FormalCategory::entry_degree(const Generator& src, const Generator& tgt) {
  return 2 * (*tgt.n - *src.n) + src.w.length() - tgt.w.length();
}

const FormalCategory::HomData& FormalCategory::hom_data(const WeylElement& x, const WeylElement& y) const {
  {
    std::lock_guard lock(mutex_);
    auto it = homs_.find({x, y});
    if (it != homs_.end()) return *it->second;
  }
  const GradedModule& dx = cat_.indecomposable(x);
  const GradedModule& dy = cat_.indecomposable(y);
  auto data = std::make_unique<HomData>();
  Presentation pres(cat_.ring(), dx);
  for (int d = dy.min_degree() - dx.max_degree(); d <= dy.max_degree() - dx.min_degree(); ++d) {
    std::vector<ModuleMap> maps = pres.hom(dy, d);
    if (x == y && d == 0 && maps.size() == 1) maps[0] = identity_map(dx);
    if (maps.empty()) continue;
    data->offset[d] = data->all.size();
    data->all.insert(data->all.end(), maps.begin(), maps.end());
    data->by_degree[d] = std::move(maps);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = homs_.try_emplace({x, y}, std::move(data));
  return *it->second;
}

const std::vector<ModuleMap>& FormalCategory::hom_rule(Side side, const Generator& src, const Generator& tgt) const {
  static const std::vector<ModuleMap> none;
  if (is_graded(side) != src.n.has_value() || is_graded(side) != tgt.n.has_value())
    throw std::invalid_argument("hom_rule: generator does not match side " + side_name(side));
  const HomData& h = hom_data(src.w, tgt.w);
  if (!is_graded(side)) return h.all;
  auto it = h.by_degree.find(entry_degree(src, tgt));
  return it == h.by_degree.end() ? none : it->second;
}

QMatrix FormalCategory::block(Side side, const Generator& src, const Generator& tgt, const QVector& coords) const {
  const auto& basis = hom_rule(side, src, tgt);
  if (coords.size() != basis.size()) throw std::invalid_argument("materialize: coordinate length mismatch");
  QMatrix m(cat_.indecomposable(tgt.w).dim(), cat_.indecomposable(src.w).dim());
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (!coords[b].is_zero()) m += coords[b] * basis[b].matrix;
  return m;
}

ModuleMap FormalCategory::materialize(Side side, const Generator& src, const Generator& tgt,
                                      const QVector& coords) const {
  const int deg = is_graded(side) ? entry_degree(src, tgt) : 0;
  return {deg, block(side, src, tgt, coords)};
}

QVector FormalCategory::coordinates(Side side, const Generator& src, const Generator& tgt,
                                    const ModuleMap& f) const {
  const auto& basis = hom_rule(side, src, tgt);
  if (basis.empty()) {
    if (!f.matrix.is_zero()) throw VerificationError("coordinates: map outside the allowed Hom space");
    return {};
  }
  std::vector<QVector> cols;
  for (const auto& b : basis) cols.push_back(b.matrix.flat());
  auto x = solve(QMatrix::from_columns(f.matrix.flat().size(), cols), f.matrix.flat());
  if (!x) throw VerificationError("coordinates: map outside the allowed Hom space");
  return *x;
}

EntryMatrix FormalCategory::compose(Side side, const std::vector<Generator>& a, const std::vector<Generator>& b,
                                    const std::vector<Generator>& c, const EntryMatrix& g,
                                    const EntryMatrix& f) const {
  EntryMatrix out(c.size(), std::vector<QVector>(a.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t i = 0; i < a.size(); ++i) {
      QMatrix sum(cat_.indecomposable(c[k].w).dim(), cat_.indecomposable(a[i].w).dim());
      for (std::size_t j = 0; j < b.size(); ++j)
        sum += block(side, b[j], c[k], g[k][j]) * block(side, a[i], b[j], f[j][i]);
      const int deg = is_graded(side) ? entry_degree(a[i], c[k]) : 0;
      out[k][i] = coordinates(side, a[i], c[k], {deg, sum});
    }
  return out;
}

bool FormalCategory::well_formed(const FormalComplex& x) const {
  for (const auto& [c, t] : x.terms)
    for (const auto& g : t)
      if (g.w.rank() != rank() || is_graded(x.side) != g.n.has_value()) return false;
  for (const auto& [c, m] : x.d) {
    const auto& src = term(x, c);
    const auto& tgt = term(x, c + 1);
    if (m.size() != tgt.size()) return false;
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      if (m[j].size() != src.size()) return false;
      for (std::size_t i = 0; i < src.size(); ++i)
        if (m[j][i].size() != hom_rule(x.side, src[i], tgt[j]).size()) return false;
    }
  }
  return true;
}

bool FormalCategory::dsquare_check(const FormalComplex& x) const {
  if (!well_formed(x)) return false;
  for (const auto& [c, f] : x.d) {
    auto it = x.d.find(c + 1);
    if (it == x.d.end()) continue;
    const auto& a = term(x, c);
    const auto& b = term(x, c + 1);
    const auto& cc = term(x, c + 2);
    for (std::size_t k = 0; k < cc.size(); ++k)
      for (std::size_t i = 0; i < a.size(); ++i) {
        QMatrix sum(cat_.indecomposable(cc[k].w).dim(), cat_.indecomposable(a[i].w).dim());
        for (std::size_t j = 0; j < b.size(); ++j)
          sum += block(x.side, b[j], cc[k], it->second[k][j]) * block(x.side, a[i], b[j], f[j][i]);
        if (!sum.is_zero()) return false;
      }
  }
  return true;
}

FormalComplex FormalCategory::degrade(const FormalComplex& x, Side to) const {
  FormalComplex out;
  out.side = to;
  for (const auto& [c, t] : x.terms)
    for (const auto& g : t) out.terms[c].push_back({g.w, std::nullopt});
  for (const auto& [c, m] : x.d) {
    const auto& src = term(x, c);
    const auto& tgt = term(x, c + 1);
    EntryMatrix e(tgt.size(), std::vector<QVector>(src.size()));
    for (std::size_t j = 0; j < tgt.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i) {
        const HomData& h = hom_data(src[i].w, tgt[j].w);
        e[j][i] = QVector(h.all.size());
        if (m[j][i].empty()) continue;
        const std::size_t off = h.offset.at(entry_degree(src[i], tgt[j]));
        std::copy(m[j][i].begin(), m[j][i].end(), e[j][i].begin() + static_cast<std::ptrdiff_t>(off));
      }
    out.d[c] = std::move(e);
  }
  return out;
}

FormalComplex FormalCategory::iota_formal(const FormalComplex& x) const {
  if (x.side != Side::kMix) throw std::invalid_argument("iota_formal: expects a MIX complex");
  return degrade(x, Side::kK);
}

FormalComplex FormalCategory::v_formal(const FormalComplex& x) const {
  if (x.side != Side::kPervGr) throw std::invalid_argument("v_formal: expects a PERV_GR complex");
  return degrade(x, Side::kPerv);
}

bool FormalCategory::square_check(const FormalComplex& x) const {
  FormalComplex a = kos_formal(iota_formal(x));
  FormalComplex b = v_formal(gkos(x));
  return a == b && dsquare_check(a) == dsquare_check(x);
}

std::size_t FormalCategory::hom_homotopy(const FormalComplex& x, const FormalComplex& y, int k) const {
  if (x.side != y.side) throw std::invalid_argument("hom_homotopy: side mismatch");
  const Side side = x.side;
  auto dim_of = [&](const Generator& g) { return cat_.indecomposable(g.w).dim(); };
  auto entry = [&](const FormalComplex& z, int c, std::size_t t, std::size_t s) -> QMatrix {
    const auto& src = term(z, c);
    const auto& tgt = term(z, c + 1);
    auto it = z.d.find(c);
    if (it == z.d.end()) return QMatrix(dim_of(tgt[t]), dim_of(src[s]));
    return block(side, src[s], tgt[t], it->second[t][s]);
  };
  const bool odd = k % 2 != 0;

  // f-space: blocks (c, j, i) for Y^{c+k} x X^c; equation space: (c, j', i) for Y^{c+k+1} x X^c.
  BlockLayout fspace, eqspace;
  for (const auto& [c, xs] : x.terms) {
    const auto& y0 = term(y, c + k);
    const auto& y1 = term(y, c + k + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < y0.size(); ++j) fspace.add(c, j, i, dim_of(y0[j]), dim_of(xs[i]));
      for (std::size_t j = 0; j < y1.size(); ++j) eqspace.add(c, j, i, dim_of(y1[j]), dim_of(xs[i]));
    }
  }

  // Chain condition (-1)^k d_Y f^c - f^{c+1} d_X^c = 0, one column per unknown.
  std::size_t nvars = 0;
  RowSpace eqs(eqspace.size());
  for (const auto& [c, xs] : x.terms) {
    const auto& y0 = term(y, c + k);
    const auto& y1 = term(y, c + k + 1);
    const auto& xprev = term(x, c - 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < y0.size(); ++j)
        for (const ModuleMap& b : hom_rule(side, xs[i], y0[j])) {
          ++nvars;
          QVector col(eqspace.size());
          for (std::size_t jp = 0; jp < y1.size(); ++jp)
            eqspace.accumulate(col, c, jp, i, entry(y, c + k, jp, j) * b.matrix, odd);
          for (std::size_t i0 = 0; i0 < xprev.size(); ++i0)
            eqspace.accumulate(col, c - 1, j, i0, b.matrix * entry(x, c - 1, i, i0), true);
          eqs.insert(std::move(col));
        }
  }
  const std::size_t cycles = nvars - eqs.rank();

  // Null-homotopic maps (-1)^k d_Y h + h d_X for h^c: X^c -> Y^{c+k-1}.
  RowSpace boundaries(fspace.size());
  for (const auto& [c, xs] : x.terms) {
    const auto& yh = term(y, c + k - 1);
    const auto& y0 = term(y, c + k);
    const auto& xprev = term(x, c - 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < yh.size(); ++j)
        for (const ModuleMap& b : hom_rule(side, xs[i], yh[j])) {
          QVector col(fspace.size());
          for (std::size_t jp = 0; jp < y0.size(); ++jp)
            fspace.accumulate(col, c, jp, i, entry(y, c + k - 1, jp, j) * b.matrix, odd);
          for (std::size_t i0 = 0; i0 < xprev.size(); ++i0)
            fspace.accumulate(col, c - 1, j, i0, b.matrix * entry(x, c - 1, i, i0), false);
          boundaries.insert(std::move(col));
        }
  }
  return cycles - boundaries.rank();
}

FormalComplex FormalCategory::random_complex(Side side, std::mt19937_64& rng, const RandomOptions& opt) const {
  std::uniform_int_distribution<int> nterms(1, opt.max_terms);
  std::uniform_int_distribution<int> start(-1, 0);
  std::uniform_int_distribution<int> ngens(1, opt.max_generators);
  std::uniform_int_distribution<std::size_t> elem(0, elements_.size() - 1);
  std::uniform_int_distribution<int> label(-opt.max_label, opt.max_label);
  std::uniform_int_distribution<int> coeff(-opt.max_entry, opt.max_entry);

  FormalComplex x;
  x.side = side;
  const int c0 = start(rng);
  const int len = nterms(rng);
  for (int c = c0; c < c0 + len; ++c) {
    const int g = ngens(rng);
    for (int t = 0; t < g; ++t) {
      Generator gen{elements_[elem(rng)], std::nullopt};
      if (is_graded(side)) {
        gen.n = label(rng);
        // Past the first term, prefer a label that receives a map from the previous term.
        if (c > c0) {
          const auto& prev = x.terms.at(c - 1);
          const Generator& s = prev[std::uniform_int_distribution<std::size_t>(0, prev.size() - 1)(rng)];
          std::vector<int> fits;
          for (int n = *s.n - 3; n <= *s.n + 3; ++n)
            if (!hom_rule(side, s, {gen.w, n}).empty()) fits.push_back(n);
          if (!fits.empty()) gen.n = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
        }
      }
      x.terms[c].push_back(std::move(gen));
    }
  }

  for (int c = c0; c + 1 < c0 + len; ++c) {
    const auto& src = x.terms.at(c);
    const auto& tgt = x.terms.at(c + 1);
    // Unknown coefficients of d^c, constrained by d^c d^{c-1} = 0.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> vars;
    for (std::size_t j = 0; j < tgt.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t b = 0; b < hom_rule(side, src[i], tgt[j]).size(); ++b) vars.emplace_back(j, i, b);
    EntryMatrix dm(tgt.size(), std::vector<QVector>(src.size()));
    for (std::size_t j = 0; j < tgt.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i) dm[j][i] = QVector(hom_rule(side, src[i], tgt[j]).size());
    if (vars.empty()) {
      x.d[c] = std::move(dm);
      continue;
    }
    std::vector<QVector> solutions;
    auto prev = x.d.find(c - 1);
    if (prev == x.d.end()) {
      for (std::size_t v = 0; v < vars.size(); ++v) {
        QVector e(vars.size());
        e[v] = 1;
        solutions.push_back(std::move(e));
      }
    } else {
      const auto& before = x.terms.at(c - 1);
      BlockLayout eq;
      for (std::size_t j = 0; j < tgt.size(); ++j)
        for (std::size_t i0 = 0; i0 < before.size(); ++i0)
          eq.add(c, j, i0, cat_.indecomposable(tgt[j].w).dim(), cat_.indecomposable(before[i0].w).dim());
      QMatrix sys(eq.size(), vars.size());
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto [j, i, b] = vars[v];
        const QMatrix& bm = hom_rule(side, src[i], tgt[j])[b].matrix;
        QVector col(eq.size());
        for (std::size_t i0 = 0; i0 < before.size(); ++i0)
          eq.accumulate(col, c, j, i0, bm * block(side, before[i0], src[i], prev->second[i][i0]), false);
        for (std::size_t r = 0; r < col.size(); ++r) sys(r, v) = col[r];
      }
      solutions = kernel_basis(sys);
    }
    QVector pick(vars.size());
    for (const QVector& s : solutions) {
      const Rational a = coeff(rng);
      if (a.is_zero()) continue;
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (!s[v].is_zero()) pick[v] += a * s[v];
    }
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto [j, i, b] = vars[v];
      dm[j][i][b] = pick[v];
    }
    x.d[c] = std::move(dm);
  }
  return x;
}

std::vector<FormalComplex> FormalCategory::two_term_corpus(Side side) const {
  std::vector<FormalComplex> out;
  const std::vector<int> labels = is_graded(side) ? std::vector<int>{-1, 0, 1} : std::vector<int>{0};
  for (const auto& x : elements_)
    for (const auto& y : elements_)
      for (int n : labels) {
        Generator src{x, is_graded(side) ? std::optional<int>(0) : std::nullopt};
        Generator tgt{y, is_graded(side) ? std::optional<int>(n) : std::nullopt};
        const std::size_t dim = hom_rule(side, src, tgt).size();
        for (std::size_t b = 0; b < dim; ++b) {
          FormalComplex c;
          c.side = side;
          c.terms[0] = {src};
          c.terms[1] = {tgt};
          QVector e(dim);
          e[b] = 1;
          c.d[0] = {{e}};
          out.push_back(std::move(c));
        }
      }
  return out;
}

}  // namespace soergel::formal
