#include "soergel/qmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace soergel {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("QMatrix: entry count mismatch");
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& cols) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("QMatrix::from_columns: bad length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("QMatrix::block");
  QMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("QMatrix::set_block");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: product shape mismatch");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) Rational::fused_add_mul(p(i, j), aik, bkj);
      }
    }
  }
  return p;
}

QMatrix operator*(const Rational& s, const QMatrix& m) {
  QMatrix r = m;
  for (auto& x : r.data_)
    if (!x.is_zero()) x *= s;
  return r;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("QMatrix: vector length mismatch");
  QVector out(m.rows_);
  for (std::size_t k = 0; k < m.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows_; ++i) {
      const Rational& mik = m(i, k);
      if (!mik.is_zero()) Rational::fused_add_mul(out[i], mik, v[k]);
    }
  }
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  std::vector<std::size_t> nz;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && a(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t c = col; c < nc; ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = Rational(1) / a(row, col);
    nz.clear();
    for (std::size_t c = col; c < nc; ++c) {
      if (a(row, c).is_zero()) continue;
      a(row, c) *= inv;
      nz.push_back(c);
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Rational f = -a(r, col);
      for (std::size_t c : nz) Rational::fused_add_mul(a(r, c), f, a(row, c));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const QMatrix& m) {
  RowSpace rs(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rs.insert(m.row(r));
  return rs.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      const Rational& e = rr.reduced(i, f);
      if (!e.is_zero()) v[rr.pivots[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  QVector x(m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.reduced(i, m.cols());
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, QMatrix::identity(n));
  RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim) {
  RowSpace rs(dim);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (rs.insert(vectors[i])) idx.push_back(i);
  return idx;
}

void RowSpace::reduce(QVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& lead = v[pivots_[i]];
    if (lead.is_zero()) continue;
    Rational f = -lead;
    const QVector& row = rows_[i];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!row[c].is_zero()) Rational::fused_add_mul(v[c], f, row[c]);
  }
}

bool RowSpace::insert(QVector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Rational inv = Rational(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  // Keep the rows fully reduced: clear column p from existing rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Rational f = -row[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) Rational::fused_add_mul(row[c], f, v[c]);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(QVector v) const {
  reduce(v);
  return is_zero(v);
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVector: length mismatch");
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVector: length mismatch");
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

QVector scaled(const Rational& s, const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = s * v[i];
  return r;
}

std::optional<QMatrix> solve_matrix(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: row count mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  QMatrix aug(a.rows(), n + k);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  RrefResult r = rref(aug);
  QMatrix x(n, k);
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t p = r.pivots[i];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) x(p, c) = r.reduced(i, n + c);
  }
  return x;
}

}  // namespace soergel
