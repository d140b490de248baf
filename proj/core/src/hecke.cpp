#include "soergel/hecke.hpp"

#include <stdexcept>

namespace soergel {
namespace {

LaurentPoly quadratic_coeff() { return LaurentPoly::monomial(-1) - LaurentPoly::monomial(1); }

void check_rank(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("HeckeElement: rank mismatch");
}

}  // namespace

HeckeElement HeckeElement::standard(const WeylElement& w, const LaurentPoly& coeff) {
  HeckeElement h(w.rank());
  h.add_term(w, coeff);
  return h;
}

LaurentPoly HeckeElement::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const WeylElement& w, const LaurentPoly& c) {
  if (w.rank() != n_) throw std::invalid_argument("HeckeElement: element of wrong rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_rank(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_rank(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement r(h.n_);
  for (const auto& [w, k] : h.terms_) r.add_term(w, c * k);
  return r;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")*H_" + it->first.to_string();
  }
  return out;
}

HeckeElement mult_simple(const HeckeElement& h, int s) {
  HeckeElement r(h.rank());
  const LaurentPoly q = quadratic_coeff();
  for (const auto& [w, c] : h.terms()) {
    WeylElement ws = w.times_simple(s);
    r.add_term(ws, c);
    if (ws.length() < w.length()) r.add_term(w, c * q);
  }
  return r;
}

HeckeElement mult(const HeckeElement& a, const HeckeElement& b) {
  check_rank(a, b);
  HeckeElement r(a.rank());
  for (const auto& [w, c] : b.terms()) {
    HeckeElement t = c * a;
    for (int s : reduced_word(w).letters) t = mult_simple(t, s);
    r += t;
  }
  return r;
}

HeckeElement bar(const HeckeElement& h) {
  HeckeElement r(h.rank());
  const int n = h.rank();
  const LaurentPoly shift = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  for (const auto& [w, c] : h.terms()) {
    // bar(H_w) = bar(H_s1) ... bar(H_sl), bar(H_s) = H_s + (v - v^-1).
    HeckeElement t = HeckeElement::standard(WeylElement::identity(n), laurent_bar(c));
    for (int s : reduced_word(w).letters) t = mult_simple(t, s) + shift * t;
    r += t;
  }
  return r;
}

HeckeElement anti_involution(const HeckeElement& h) {
  HeckeElement r(h.rank());
  for (const auto& [w, c] : h.terms()) r.add_term(w.inverse(), c);
  return r;
}

LaurentPoly trace(const HeckeElement& h) { return h.coeff(WeylElement::identity(h.rank())); }

HeckeAlgebra::HeckeAlgebra(int n, int cap) : group_(n, cap) {
  const std::size_t N = group_.size();
  kl_.resize(N);
  kl_[group_.identity_index()] = HeckeElement::standard(group_.element(0));
  // Elements are sorted by length, so every ws below is already done.
  for (std::size_t w = 1; w < N; ++w) {
    const WeylElement& we = group_.element(w);
    int s = *we.right_descents().begin();
    std::size_t ws = group_.right_mult(w, s);
    const HeckeElement& bws = kl_[ws];
    HeckeElement b = mult_simple(bws, s) + LaurentPoly::v() * bws;  // b_ws * b_s
    for (std::size_t y = 0; y < N; ++y) {
      if (group_.length(y) >= group_.length(ws)) break;
      if (group_.length(group_.right_mult(y, s)) >= group_.length(y)) continue;
      Rational m = bws.coeff(group_.element(y)).coeff(1);
      if (!m.is_zero()) b -= LaurentPoly(m) * kl_[y];
    }
    kl_[w] = std::move(b);
  }
}

const HeckeElement& HeckeAlgebra::kl_basis(const WeylElement& w) const { return kl_[group_.index(w)]; }

LaurentPoly HeckeAlgebra::kl_poly(const WeylElement& x, const WeylElement& w) const {
  return kl_basis(w).coeff(x);
}

LaurentPoly HeckeAlgebra::classical_kl_poly(const WeylElement& x, const WeylElement& w) const {
  LaurentPoly p = kl_poly(x, w).shifted(x.length() - w.length());
  LaurentPoly q;
  for (const auto& [e, c] : p.terms()) {
    if (e > 0 || e % 2 != 0) throw std::logic_error("classical_kl_poly: unexpected exponent");
    q.add_term(-e / 2, c);
  }
  return q;
}

Rational HeckeAlgebra::mu(const WeylElement& x, const WeylElement& w) const {
  return kl_poly(x, w).coeff(1);
}

HeckeElement HeckeAlgebra::product_bs(const Word& word) const {
  if (word.n != rank()) throw std::invalid_argument("product_bs: rank mismatch");
  HeckeElement h = HeckeElement::standard(WeylElement::identity(rank()));
  for (int s : word.letters) h = mult_simple(h, s) + LaurentPoly::v() * h;
  return h;
}

std::map<WeylElement, LaurentPoly> HeckeAlgebra::kl_expand(const HeckeElement& h) const {
  if (h.rank() != rank()) throw std::invalid_argument("kl_expand: rank mismatch");
  std::map<WeylElement, LaurentPoly> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    // A term of maximal length has the same coefficient in the KL basis.
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.length() > top->first.length()) top = it;
    WeylElement x = top->first;
    LaurentPoly m = top->second;
    out.emplace(x, m);
    rest -= m * kl_basis(x);
  }
  return out;
}

HeckeElement HeckeAlgebra::kl_combine(const std::map<WeylElement, LaurentPoly>& coeffs) const {
  HeckeElement h(rank());
  for (const auto& [x, m] : coeffs) h += m * kl_basis(x);
  return h;
}

LaurentPoly HeckeAlgebra::pairing(const HeckeElement& h1, const HeckeElement& h2,
                                  PairingConvention conv) const {
  HeckeElement a = conv == PairingConvention::kInverseLinear ? anti_involution(h1)
                                                             : anti_involution(bar(h1));
  return trace(mult(a, h2));
}

LaurentPoly HeckeAlgebra::character(const HeckeElement& h) const {
  LaurentPoly c;
  for (const auto& [x, m] : h.terms()) c += m.shifted(-x.length());
  return c;
}

}  // namespace soergel
