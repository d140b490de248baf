#include "soergel/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace soergel {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::elementary(int nvars, int k) {
  MultiPoly p(nvars);
  if (k < 0 || k > nvars) return p;
  // Walk all 0/1 vectors with exactly k ones.
  std::vector<int> sel(static_cast<std::size_t>(nvars), 0);
  std::fill(sel.end() - k, sel.end(), 1);
  do {
    p.add_term(sel, Rational(1));
  } while (std::next_permutation(sel.begin(), sel.end()));
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) r.terms_.emplace(e, c);
  return r;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly r(p.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : p.terms_) r.terms_.emplace(e, c * k);
  return r;
}

MultiPoly MultiPoly::divided_difference(int i) const {
  if (i < 1 || i >= nvars_) throw std::out_of_range("divided_difference: index out of range");
  auto a_idx = static_cast<std::size_t>(i - 1);
  auto b_idx = a_idx + 1;
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int a = e[a_idx], b = e[b_idx];
    if (a == b) continue;
    // (x^a y^b - x^b y^a)/(x - y) = sign * (xy)^min * sum_{j} x^{hi-lo-1-j} y^j
    int lo = std::min(a, b), hi = std::max(a, b);
    Rational coeff = a > b ? c : -c;
    Exponent f = e;
    for (int j = 0; j < hi - lo; ++j) {
      f[a_idx] = lo + (hi - lo - 1 - j);
      f[b_idx] = lo + j;
      r.add_term(f, coeff);
    }
  }
  return r;
}

MultiPoly multipoly_perm_act(std::span<const int> perm, const MultiPoly& p) {
  if (static_cast<int>(perm.size()) != p.nvars())
    throw std::invalid_argument("multipoly_perm_act: degree mismatch");
  MultiPoly r(p.nvars());
  Exponent f(perm.size());
  for (const auto& [e, c] : p.terms()) {
    // x_i^{e_i} -> x_{w(i)}^{e_i}
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i] - 1)] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string monomial_to_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first, then reverse-lex within a degree, as a human would write it.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    return std::accumulate(l.first.begin(), l.first.end(), 0) >
           std::accumulate(r.first.begin(), r.first.end(), 0);
  });
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(e);
    if (mono == "1") {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace soergel
