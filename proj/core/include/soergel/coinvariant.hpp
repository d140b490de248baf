#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "soergel/laurent.hpp"
#include "soergel/multipoly.hpp"
#include "soergel/qmatrix.hpp"
#include "soergel/weyl.hpp"

namespace soergel {

/// Element of the coinvariant algebra, as coordinates in the staircase basis.
struct CoinvariantElement {
  QVector coords;
  /// Set when the element is homogeneous (cohomological degree, deg x_i = 2).
  std::optional<int> degree;

  [[nodiscard]] bool is_zero() const { return soergel::is_zero(coords); }
  friend bool operator==(const CoinvariantElement& a, const CoinvariantElement& b) {
    return a.coords == b.coords;
  }
};

/// C = Q[x_1..x_n] / (e_1, ..., e_n), graded with deg x_i = 2.
///
/// The basis is the staircase monomials x^a with 0 <= a_i <= n - i. Normal
/// forms come from per-degree row reduction of the ideal's graded slices
/// against all monomials; the reduction of every monomial up to the top
/// degree is tabulated at construction. Read-only after construction.
class CoinvariantRing {
 public:
  explicit CoinvariantRing(int n, int cap = kDefaultRankCap);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Exponent>& basis() const { return basis_; }
  /// Cohomological degree of basis element i.
  [[nodiscard]] int degree(std::size_t i) const { return degrees_[i]; }
  /// n(n-1), the degree of the socle.
  [[nodiscard]] int top_degree() const { return n_ * (n_ - 1); }
  /// Basis indices of the given cohomological degree, in basis order.
  [[nodiscard]] const std::vector<std::size_t>& basis_in_degree(int degree) const;
  [[nodiscard]] std::map<int, std::size_t> graded_dims() const;
  /// sum_d dim C_d v^d.
  [[nodiscard]] LaurentPoly poincare() const;

  [[nodiscard]] CoinvariantElement zero() const;
  [[nodiscard]] CoinvariantElement one() const;
  [[nodiscard]] CoinvariantElement basis_element(std::size_t i) const;
  [[nodiscard]] CoinvariantElement variable(int i) const;  // image of x_i

  [[nodiscard]] CoinvariantElement normal_form(const MultiPoly& p) const;
  /// Sum of coordinates times staircase monomials.
  [[nodiscard]] MultiPoly lift(const CoinvariantElement& c) const;

  [[nodiscard]] CoinvariantElement add(const CoinvariantElement& a, const CoinvariantElement& b) const;
  [[nodiscard]] CoinvariantElement scale(const Rational& s, const CoinvariantElement& a) const;
  [[nodiscard]] CoinvariantElement multiply(const CoinvariantElement& a, const CoinvariantElement& b) const;
  /// Matrix of multiplication by x_i in the staircase basis.
  [[nodiscard]] const QMatrix& x_action(int i) const { return x_action_[static_cast<std::size_t>(i - 1)]; }
  /// Matrix of multiplication by c.
  [[nodiscard]] QMatrix multiplication_matrix(const CoinvariantElement& c) const;

  [[nodiscard]] CoinvariantElement weyl_act(const WeylElement& w, const CoinvariantElement& c) const;
  /// Matrix of w acting on C.
  [[nodiscard]] QMatrix weyl_matrix(const WeylElement& w) const;
  /// (c - s_i c) / (x_i - x_{i+1}), via polynomial lifts.
  [[nodiscard]] CoinvariantElement demazure(int i, const CoinvariantElement& c) const;

  /// Graded basis of C^{s_i}, sorted by degree.
  [[nodiscard]] std::vector<CoinvariantElement> invariants_basis(int i) const;
  [[nodiscard]] bool is_invariant(int i, const CoinvariantElement& c) const;
  /// Algebra generators of C^{s_i}: images of x_j (j != i, i+1), x_i + x_{i+1}, x_i x_{i+1}.
  [[nodiscard]] std::vector<CoinvariantElement> invariant_generators(int i) const;
  /// c = a + x_i b with a, b in C^{s_i}: b = demazure(i, c), a = c - x_i b.
  [[nodiscard]] std::pair<CoinvariantElement, CoinvariantElement> split_over_Cs(
      int i, const CoinvariantElement& c) const;

  /// "3*x1^2*x2 - 1/2*x1"
  [[nodiscard]] std::string to_string(const CoinvariantElement& c) const;

 private:
  [[nodiscard]] const QVector& monomial_normal_form(const Exponent& e) const;
  void check(const CoinvariantElement& c) const;
  [[nodiscard]] std::optional<int> homogeneous_degree(const QVector& coords) const;

  int n_;
  std::vector<Exponent> basis_;
  std::vector<int> degrees_;
  std::map<int, std::vector<std::size_t>> by_degree_;
  std::map<Exponent, std::size_t> basis_index_;
  std::map<Exponent, QVector> reductions_;  // every monomial of degree <= n(n-1)/2
  std::vector<QMatrix> x_action_;
  QVector zero_coords_;  // normal form of anything above the top degree
};

}  // namespace soergel
