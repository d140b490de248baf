#include "soergel/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace soergel {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kSmallMax = INT64_MAX;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? u128(-(v + 1)) + 1 : u128(v);
  auto hi = static_cast<unsigned long>(mag >> 64);
  auto lo = static_cast<unsigned long>(mag & ~0UL);
  mpz_class r = hi;
  r <<= 64;
  r += lo;
  if (neg) r = -r;
  return r;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(num, den);
}

void Rational::promote_from(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  if (fits_small(v.get_num()) && fits_small(v.get_den())) {
    num_ = v.get_num().get_si();
    den_ = v.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(v));
  }
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 mag = num < 0 ? u128(-num) : u128(num);
  u128 g = gcd_u128(mag, u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  Rational r;
  if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.promote_from(q);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

long long Rational::to_int64() const {
  if (big_ || den_ != 1) throw std::domain_error("Rational: not a small integer");
  return num_;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) {
        Rational r;
        r.num_ = s;
        return r;
      }
    }
    return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                               i128(a.den_) * b.den_);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return {};
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) {
        Rational r;
        r.num_ = p;
        return r;
      }
    }
    return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  return Rational(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

void Rational::fused_add_mul(Rational& a, const Rational& b, const Rational& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (!a.big_ && !b.big_ && !c.big_ && a.den_ == 1 && b.den_ == 1 && c.den_ == 1) {
    std::int64_t p, s;
    if (!__builtin_mul_overflow(b.num_, c.num_, &p) && !__builtin_add_overflow(a.num_, p, &s) &&
        s != INT64_MIN) {
      a.num_ = s;
      return;
    }
  }
  a = a + b * c;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace soergel
