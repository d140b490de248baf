#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "soergel/rational.hpp"

namespace soergel {

using Exponent = std::vector<int>;

/// Polynomial in x_1..x_n with rational coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);  // x_i, 1-based
  static MultiPoly monomial(const Exponent& e, const Rational& c = Rational(1));
  /// e_k(x_1..x_n)
  static MultiPoly elementary(int nvars, int k);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coeff(const Exponent& e) const;
  /// Total degree of the highest term; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] MultiPoly homogeneous_part(int degree) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Divided difference (p - s_i p) / (x_i - x_{i+1}), 1 <= i < n.
  [[nodiscard]] MultiPoly divided_difference(int i) const;

  /// "3*x1^2*x2 - 1/2*x1"; "0" for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Permutes variables: (w.p)(x_i) = x_{w(i)}. `perm` is one-line notation,
/// 1-based values, of length nvars.
MultiPoly multipoly_perm_act(std::span<const int> perm, const MultiPoly& p);

std::string monomial_to_string(const Exponent& e);

}  // namespace soergel
