#include "soergel/tate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace soergel::tate {
namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> e(-2, 2);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

std::set<int> support(const UngradedComplex& x) {
  std::set<int> s;
  for (const auto& [c, k] : x.dims)
    if (k) s.insert(c);
  return s;
}

template <class F>
BigradedComplex per_strand(const BigradedComplex& x, F f) {
  BigradedComplex out;
  for (const auto& [g, s] : x.strands) out.strands[g] = f(s, g);
  return out.normalized();
}

}  // namespace

std::size_t UngradedComplex::dim(int c) const {
  auto it = dims.find(c);
  return it == dims.end() ? 0 : it->second;
}

QMatrix UngradedComplex::differential(int c) const {
  auto it = d.find(c);
  if (it != d.end()) return it->second;
  return QMatrix(dim(c + 1), dim(c));
}

bool UngradedComplex::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](const auto& e) { return e.second == 0; });
}

bool UngradedComplex::dsquare_zero() const {
  for (const auto& [c, m] : d) {
    if (m.rows() != dim(c + 1) || m.cols() != dim(c)) return false;
    if (!(differential(c + 1) * m).is_zero()) return false;
  }
  return true;
}

UngradedComplex UngradedComplex::normalized() const {
  UngradedComplex out;
  for (const auto& [c, k] : dims)
    if (k) out.dims.emplace(c, k);
  for (const auto& [c, m] : d)
    if (!m.empty() && !m.is_zero()) out.d.emplace(c, m);
  return out;
}

std::map<int, std::size_t> UngradedComplex::cohomology() const {
  std::map<int, std::size_t> h;
  for (int c : support(*this)) {
    std::size_t k = dim(c) - rank(differential(c)) - rank(differential(c - 1));
    if (k) h[c] = k;
  }
  return h;
}

std::size_t BigradedComplex::dim(int c, int g) const {
  auto it = strands.find(g);
  return it == strands.end() ? 0 : it->second.dim(c);
}

bool BigradedComplex::is_zero() const {
  return std::all_of(strands.begin(), strands.end(), [](const auto& e) { return e.second.is_zero(); });
}

bool BigradedComplex::dsquare_zero() const {
  return std::all_of(strands.begin(), strands.end(), [](const auto& e) { return e.second.dsquare_zero(); });
}

BigradedComplex BigradedComplex::normalized() const {
  BigradedComplex out;
  for (const auto& [g, s] : strands)
    if (!s.is_zero()) out.strands.emplace(g, s.normalized());
  return out;
}

std::map<std::pair<int, int>, std::size_t> BigradedComplex::cohomology() const {
  std::map<std::pair<int, int>, std::size_t> h;
  for (const auto& [g, s] : strands)
    for (const auto& [c, k] : s.cohomology()) h[{c, g}] = k;
  return h;
}

BigradedComplex simple(int c, int g) {
  BigradedComplex x;
  x.strands[g].dims[c] = 1;
  return x;
}

int weight_of(int c, int g) { return c - 2 * g; }

UngradedComplex direct_sum(const UngradedComplex& a, const UngradedComplex& b) {
  UngradedComplex out;
  std::set<int> cs = support(a);
  cs.merge(support(b));
  for (int c : cs) out.dims[c] = a.dim(c) + b.dim(c);
  for (int c : cs) {
    QMatrix m(out.dim(c + 1), out.dim(c));
    m.set_block(0, 0, a.differential(c));
    m.set_block(a.dim(c + 1), a.dim(c), b.differential(c));
    out.d[c] = std::move(m);
  }
  return out.normalized();
}

BigradedComplex direct_sum(const BigradedComplex& a, const BigradedComplex& b) {
  BigradedComplex out = a;
  for (const auto& [g, s] : b.strands) out.strands[g] = direct_sum(out.strands[g], s);
  return out.normalized();
}

UngradedComplex shift(const UngradedComplex& x, int k) {
  UngradedComplex out;
  const Rational sign = k % 2 ? -1 : 1;
  for (const auto& [c, n] : x.dims) out.dims[c - k] = n;
  for (const auto& [c, m] : x.d) out.d[c - k] = sign * m;
  return out.normalized();
}

BigradedComplex shift(const BigradedComplex& x, int k) {
  return per_strand(x, [k](const UngradedComplex& s, int) { return shift(s, k); });
}

BigradedComplex twist_shift(const BigradedComplex& x, int p, int q) {
  BigradedComplex out;
  for (const auto& [g, s] : x.strands) out.strands[g - p] = shift(s, q);
  return out.normalized();
}

UngradedComplex iota_collapse(const BigradedComplex& x) {
  // Degree c' receives (c' + 2g, g) for every g, stacked in increasing g.
  std::map<int, std::vector<std::pair<int, std::size_t>>> parts;  // c' -> (g, offset)
  UngradedComplex out;
  for (const auto& [g, s] : x.strands)
    for (const auto& [c, k] : s.dims) {
      if (!k) continue;
      const int cp = c - 2 * g;
      parts[cp].emplace_back(g, out.dims[cp]);
      out.dims[cp] += k;
    }
  for (const auto& [cp, list] : parts) {
    if (!parts.contains(cp + 1)) continue;
    QMatrix m(out.dim(cp + 1), out.dim(cp));
    for (const auto& [g, off] : list)
      for (const auto& [g2, off2] : parts.at(cp + 1))
        if (g2 == g) m.set_block(off2, off, x.strands.at(g).differential(cp + 2 * g));
    out.d[cp] = std::move(m);
  }
  return out.normalized();
}

UngradedComplex minimize(const UngradedComplex& x) {
  UngradedComplex out;
  for (const auto& [c, k] : x.cohomology()) out.dims[c] = k;
  return out;
}

BigradedComplex minimize(const BigradedComplex& x) {
  return per_strand(x, [](const UngradedComplex& s, int) { return minimize(s); });
}

UngradedComplex t_truncate_leq(const UngradedComplex& x, int m) {
  UngradedComplex out;
  for (const auto& [c, k] : x.dims)
    if (c < m) out.dims[c] = k;
  for (const auto& [c, d] : x.d)
    if (c + 1 < m) out.d[c] = d;
  std::vector<QVector> ker = kernel_basis(x.differential(m));
  if (!ker.empty()) {
    out.dims[m] = ker.size();
    QMatrix kmat = QMatrix::from_columns(x.dim(m), ker);
    auto coords = solve_matrix(kmat, x.differential(m - 1));
    if (!coords) throw std::logic_error("t_truncate_leq: d^2 != 0");
    out.d[m - 1] = *coords;
  }
  return out.normalized();
}

UngradedComplex t_truncate_geq(const UngradedComplex& x, int m) {
  UngradedComplex out;
  for (const auto& [c, k] : x.dims)
    if (c > m) out.dims[c] = k;
  for (const auto& [c, d] : x.d)
    if (c > m) out.d[c] = d;
  // coker d^{m-1}: coordinates of the reduced vector at the non-pivot positions.
  const std::size_t n = x.dim(m);
  RowSpace im(n);
  QMatrix prev = x.differential(m - 1);
  for (std::size_t j = 0; j < prev.cols(); ++j) im.insert(prev.column(j));
  std::vector<bool> pivot(n, false);
  for (std::size_t p : im.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) free.push_back(i);
  if (!free.empty()) {
    out.dims[m] = free.size();
    QMatrix next = x.differential(m);
    QMatrix dm(next.rows(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j)
      for (std::size_t r = 0; r < next.rows(); ++r) dm(r, j) = next(r, free[j]);
    out.d[m] = std::move(dm);
  }
  return out.normalized();
}

BigradedComplex t_truncate_leq(const BigradedComplex& x, int m) {
  return per_strand(x, [m](const UngradedComplex& s, int) { return t_truncate_leq(s, m); });
}

BigradedComplex t_truncate_geq(const BigradedComplex& x, int m) {
  return per_strand(x, [m](const UngradedComplex& s, int) { return t_truncate_geq(s, m); });
}

UngradedComplex w_truncate_leq(const UngradedComplex& x, int m) {
  UngradedComplex out;
  for (const auto& [c, k] : minimize(x).dims)
    if (c <= m) out.dims[c] = k;
  return out;
}

UngradedComplex w_truncate_geq(const UngradedComplex& x, int m) {
  UngradedComplex out;
  for (const auto& [c, k] : minimize(x).dims)
    if (c >= m) out.dims[c] = k;
  return out;
}

BigradedComplex w_truncate_leq(const BigradedComplex& x, int m) {
  BigradedComplex out;
  for (const auto& [cg, k] : x.cohomology())
    if (weight_of(cg.first, cg.second) <= m) out.strands[cg.second].dims[cg.first] = k;
  return out;
}

BigradedComplex w_truncate_geq(const BigradedComplex& x, int m) {
  BigradedComplex out;
  for (const auto& [cg, k] : x.cohomology())
    if (weight_of(cg.first, cg.second) >= m) out.strands[cg.second].dims[cg.first] = k;
  return out;
}

std::size_t hom_homotopy(const UngradedComplex& x, const UngradedComplex& y, int k) {
  const Rational sign = k % 2 ? -1 : 1;
  std::set<int> cs = support(x);
  // Unknowns f^c : X^c -> Y^{c+k}, flattened row-major.
  std::map<int, std::size_t> foff;
  std::size_t nf = 0;
  for (int c : cs) {
    foff[c] = nf;
    nf += y.dim(c + k) * x.dim(c);
  }
  if (nf == 0) return 0;
  auto fidx = [&](int c, std::size_t r, std::size_t s) { return foff.at(c) + r * x.dim(c) + s; };

  // Chain condition: sign d_Y f^c - f^{c+1} d_X = 0 on X^c.
  std::vector<QVector> eqs;
  for (int c : cs) {
    const QMatrix dy = y.differential(c + k);
    const QMatrix dx = x.differential(c);
    const std::size_t R = y.dim(c + k + 1), S = x.dim(c);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t s = 0; s < S; ++s) {
        QVector row(nf);
        for (std::size_t t = 0; t < y.dim(c + k); ++t)
          if (!dy(r, t).is_zero()) row[fidx(c, t, s)] += sign * dy(r, t);
        if (foff.contains(c + 1))
          for (std::size_t u = 0; u < x.dim(c + 1); ++u)
            if (!dx(u, s).is_zero()) row[fidx(c + 1, r, u)] -= dx(u, s);
        if (!is_zero(row)) eqs.push_back(std::move(row));
      }
  }
  RowSpace z(nf);
  for (auto& e : eqs) z.insert(std::move(e));
  const std::size_t cycles = nf - z.rank();

  // Null-homotopic maps: h^c : X^c -> Y^{c+k-1}, f = sign d_Y h + h d_X.
  RowSpace b(nf);
  for (int c : cs) {
    const QMatrix dy = y.differential(c + k - 1);
    const QMatrix dxprev = x.differential(c - 1);
    for (std::size_t t = 0; t < y.dim(c + k - 1); ++t)
      for (std::size_t s = 0; s < x.dim(c); ++s) {
        QVector img(nf);
        for (std::size_t r = 0; r < y.dim(c + k); ++r)
          if (!dy(r, t).is_zero()) img[fidx(c, r, s)] += sign * dy(r, t);
        if (foff.contains(c - 1))
          for (std::size_t u = 0; u < x.dim(c - 1); ++u)
            if (!dxprev(s, u).is_zero()) img[fidx(c - 1, t, u)] += dxprev(s, u);
        b.insert(std::move(img));
      }
  }
  return cycles - b.rank();
}

std::size_t hom_homotopy(const BigradedComplex& x, const BigradedComplex& y, int k) {
  std::size_t total = 0;
  for (const auto& [g, s] : x.strands) {
    auto it = y.strands.find(g);
    if (it != y.strands.end()) total += hom_homotopy(s, it->second, k);
  }
  return total;
}

UngradedComplex random_ungraded(std::mt19937_64& rng, int c_span, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dd(0, max_dim);
  UngradedComplex x;
  for (int c = -c_span; c <= c_span; ++c) x.dims[c] = dd(rng);
  QMatrix prev(x.dim(-c_span), 0);
  for (int c = -c_span; c < c_span; ++c) {
    // Rows of d^c are random combinations of the annihilator of im d^{c-1}.
    std::vector<QVector> ann = kernel_basis(prev.transpose());
    QMatrix coeff = random_matrix(rng, x.dim(c + 1), ann.size());
    QMatrix d(x.dim(c + 1), x.dim(c));
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t a = 0; a < ann.size(); ++a)
        for (std::size_t j = 0; j < d.cols(); ++j) Rational::fused_add_mul(d(r, j), coeff(r, a), ann[a][j]);
    x.d[c] = d;
    prev = std::move(d);
  }
  return x.normalized();
}

BigradedComplex random_complex(std::mt19937_64& rng, int c_span, int g_span, std::size_t max_dim) {
  BigradedComplex x;
  for (int g = -g_span; g <= g_span; ++g) x.strands[g] = random_ungraded(rng, c_span, max_dim);
  return x.normalized();
}

bool degrees_leq(const UngradedComplex& x, int m) {
  auto h = x.cohomology();
  return h.empty() || h.rbegin()->first <= m;
}

bool degrees_geq(const UngradedComplex& x, int m) {
  auto h = x.cohomology();
  return h.empty() || h.begin()->first >= m;
}

bool degrees_leq(const BigradedComplex& x, int m) {
  return std::all_of(x.strands.begin(), x.strands.end(), [m](const auto& e) { return degrees_leq(e.second, m); });
}

bool degrees_geq(const BigradedComplex& x, int m) {
  return std::all_of(x.strands.begin(), x.strands.end(), [m](const auto& e) { return degrees_geq(e.second, m); });
}

bool weights_leq(const BigradedComplex& x, int m) {
  for (const auto& [cg, k] : x.cohomology())
    if (weight_of(cg.first, cg.second) > m) return false;
  return true;
}

bool weights_geq(const BigradedComplex& x, int m) {
  for (const auto& [cg, k] : x.cohomology())
    if (weight_of(cg.first, cg.second) < m) return false;
  return true;
}

namespace {

std::map<std::pair<int, int>, std::size_t> coh(const BigradedComplex& x) { return x.cohomology(); }
std::map<std::pair<int, int>, std::size_t> coh(const UngradedComplex& x) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [c, k] : x.cohomology()) out[{c, 0}] = k;
  return out;
}

template <class X>
std::map<std::pair<int, int>, std::size_t> coh_sum(const X& a, const X& b) {
  auto h = coh(a);
  for (const auto& [k, v] : coh(b)) h[k] += v;
  return h;
}

// lower/upper split x; in_lower/in_upper test membership in the two aisles.
template <class X, class Lo, class Up, class InLo, class InUp>
AxiomReport check_axioms(const std::vector<X>& sample, Lo lower, Up upper, InLo in_lower, InUp in_upper,
                         bool hom_upper_to_lower, const char* name) {
  AxiomReport rep;
  auto fail = [&](const std::string& what, std::size_t i) {
    rep.failures.push_back(std::string(name) + ": " + what + " (sample " + std::to_string(i) + ")");
  };
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const X& x = sample[i];
    X lo = lower(x), up = upper(x);
    ++rep.checks;
    if (!in_lower(lo)) fail("lower half outside its aisle", i);
    ++rep.checks;
    if (!in_upper(up)) fail("upper half outside its aisle", i);
    // Aisles are stable in the expected direction: lower[1] stays lower, upper[-1] stays upper.
    ++rep.checks;
    if (!in_lower(shift(lo, 1))) fail("lower aisle not stable under [1]", i);
    ++rep.checks;
    if (!in_upper(shift(up, -1))) fail("upper aisle not stable under [-1]", i);
    ++rep.checks;
    if (coh_sum(lo, up) != coh(x)) fail("x is not the sum of its truncations", i);
    // Closed under direct summands / sums.
    const X& other = sample[(i + 1) % sample.size()];
    ++rep.checks;
    if (coh(lower(direct_sum(x, other))) != coh_sum(lo, lower(other))) fail("truncation not additive", i);
    for (std::size_t j = 0; j < sample.size(); ++j) {
      ++rep.checks;
      const X lo_j = lower(sample[j]);
      const X up_j = upper(sample[j]);
      std::size_t h = hom_upper_to_lower ? hom_homotopy(up, lo_j, 0) : hom_homotopy(lo, up_j, 0);
      if (h != 0) fail("orthogonality violated against sample " + std::to_string(j), i);
    }
  }
  return rep;
}

}  // namespace

AxiomReport check_t_axioms(const std::vector<BigradedComplex>& sample) {
  return check_axioms(
      sample, [](const BigradedComplex& x) { return t_truncate_leq(x, 0); },
      [](const BigradedComplex& x) { return t_truncate_geq(x, 1); },
      [](const BigradedComplex& x) { return degrees_leq(x, 0); },
      [](const BigradedComplex& x) { return degrees_geq(x, 1); }, false, "t-structure");
}

AxiomReport check_t_axioms(const std::vector<UngradedComplex>& sample) {
  return check_axioms(
      sample, [](const UngradedComplex& x) { return t_truncate_leq(x, 0); },
      [](const UngradedComplex& x) { return t_truncate_geq(x, 1); },
      [](const UngradedComplex& x) { return degrees_leq(x, 0); },
      [](const UngradedComplex& x) { return degrees_geq(x, 1); }, false, "t-structure");
}

AxiomReport check_w_axioms(const std::vector<BigradedComplex>& sample) {
  // Q[1] has weight -1, so [1] lowers weights: w<=-1 is stable under [1], w>=0 under [-1].
  return check_axioms(
      sample, [](const BigradedComplex& x) { return w_truncate_leq(x, -1); },
      [](const BigradedComplex& x) { return w_truncate_geq(x, 0); },
      [](const BigradedComplex& x) { return weights_leq(x, -1); },
      [](const BigradedComplex& x) { return weights_geq(x, 0); }, true, "weight structure");
}

AxiomReport check_w_axioms(const std::vector<UngradedComplex>& sample) {
  return check_axioms(
      sample, [](const UngradedComplex& x) { return w_truncate_leq(x, -1); },
      [](const UngradedComplex& x) { return w_truncate_geq(x, 0); },
      [](const UngradedComplex& x) { return degrees_leq(x, -1); },
      [](const UngradedComplex& x) { return degrees_geq(x, 0); }, true, "weight structure");
}

}  // namespace soergel::tate
