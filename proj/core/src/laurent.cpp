#include "soergel/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace soergel {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: min_exponent of zero");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: max_exponent of zero");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::at_one() const {
  Rational s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_symmetric() const { return laurent_bar(*this) == *this; }

bool LaurentPoly::has_nonnegative_integer_coeffs() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_integer() || c.sign() < 0) return false;
  }
  return true;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly laurent_bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    }
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly p;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("LaurentPoly: cannot parse '" + std::string(text) + "'"); };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (text.substr(i) == "0") return p;
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      fail();
    }
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (i < text.size() && text[i] == '(') {
      auto close = text.find(')', i);
      if (close == std::string_view::npos) fail();
      coeff = Rational::parse(text.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coeff = true;
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_int();
      if (i < text.size() && text[i] == '/') {
        ++i;
        num += "/" + read_int();
      }
      coeff = Rational::parse(num);
      have_coeff = true;
    }
    int exponent = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string e = read_int();
        if (e.empty() || e == "-" || e == "+") fail();
        exponent = std::stoi(e);
      }
    } else if (!have_coeff) {
      fail();
    }
    p.add_term(exponent, sign < 0 ? -coeff : coeff);
    any = true;
    skip_ws();
  }
  if (!any) fail();
  return p;
}

}  // namespace soergel
