#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "soergel/rational.hpp"

namespace soergel {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-list literal, for tests: QMatrix::from_rows({{1, 2}, {2, 4}}).
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return data_; }

  [[nodiscard]] QVector row(std::size_t r) const;
  [[nodiscard]] QVector column(std::size_t c) const;
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
  /// Entries flattened row-major, for use as a vector in a larger linear system.
  [[nodiscard]] const QVector& flat() const { return data_; }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& m);
  friend QVector operator*(const QMatrix& m, const QVector& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Basis of the null space {x : m x = 0}; one vector per free column.
std::vector<QVector> kernel_basis(const QMatrix& m);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Some X with a X = b, column by column, or nullopt if any column is inconsistent.
std::optional<QMatrix> solve_matrix(const QMatrix& a, const QMatrix& b);

/// Indices of a maximal linearly independent subset of `vectors`, greedy in order.
std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim);

/// Incrementally maintained row space in reduced echelon form. Supports
/// membership tests and reduction of vectors against the span.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  /// Reduces v against the current span in place; the result is zero iff v was in the span.
  void reduce(QVector& v) const;
  /// Adds v to the span. Returns true iff the rank grew.
  bool insert(QVector v);
  [[nodiscard]] bool contains(QVector v) const;
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Reduced rows, each with a leading 1 at its pivot and zeros at other pivots.
  [[nodiscard]] const std::vector<QVector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
};

bool is_zero(const QVector& v);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector scaled(const Rational& s, const QVector& v);

}  // namespace soergel
