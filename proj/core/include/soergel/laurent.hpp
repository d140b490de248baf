#pragma once

#include <map>
#include <string>
#include <string_view>

#include "soergel/rational.hpp"

namespace soergel {

/// Laurent polynomial in one variable v with rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(int exponent, const Rational& coeff = Rational(1));
  /// v
  static LaurentPoly v() { return monomial(1); }
  /// Parses the sparse form produced by to_string(), e.g. "v^-1+2v^3" or "-1/2v".
  static LaurentPoly parse(std::string_view text);

  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coeff(int exponent) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int min_exponent() const;
  [[nodiscard]] int max_exponent() const;
  /// Value at v = 1.
  [[nodiscard]] Rational at_one() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  /// Invariant under v -> v^-1.
  [[nodiscard]] bool is_symmetric() const;
  /// All coefficients are non-negative integers.
  [[nodiscard]] bool has_nonnegative_integer_coeffs() const;

  /// Canonical sparse form, ascending exponents: "v^-1+v", "1+2v^2", "0".
  [[nodiscard]] std::string to_string() const;

  void add_term(int exponent, const Rational& coeff);
  [[nodiscard]] LaurentPoly shifted(int k) const;  // multiply by v^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::map<int, Rational> terms_;
};

/// Substitutes v -> v^-1.
LaurentPoly laurent_bar(const LaurentPoly& p);

}  // namespace soergel
