#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace soergel {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; everything else falls back to a GMP rational. The two
/// representations are never both valid for the same value, so equality can
/// compare representations directly.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) promote_from(mpq_class(mpz_class(std::to_string(value))));
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value) { promote_from(value); }

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;
  /// Only valid when the value is an integer that fits in 64 bits.
  [[nodiscard]] long long to_int64() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// a += b * c without intermediate allocation in the common small case.
  static void fused_add_mul(Rational& a, const Rational& b, const Rational& c);

 private:
  void promote_from(const mpq_class& value);
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace soergel
