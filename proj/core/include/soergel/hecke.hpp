#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "soergel/laurent.hpp"
#include "soergel/weyl.hpp"

namespace soergel {

/// Element of the Hecke algebra of S_n in the standard basis {H_w}.
/// Normalization: H_s^2 = H_e + (v^-1 - v) H_s, and b_s = H_s + v.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement standard(const WeylElement& w, const LaurentPoly& coeff = LaurentPoly(1));

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const std::map<WeylElement, LaurentPoly>& terms() const { return terms_; }
  [[nodiscard]] LaurentPoly coeff(const WeylElement& w) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const WeylElement& w, const LaurentPoly& c);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) = default;

  /// "H_321*(v^3+v) + H_123*(1)" style, ordered by element.
  [[nodiscard]] std::string to_string() const;

 private:
  int n_ = 1;
  std::map<WeylElement, LaurentPoly> terms_;
};

/// Right multiplication by H_s.
HeckeElement mult_simple(const HeckeElement& h, int s);
HeckeElement mult(const HeckeElement& a, const HeckeElement& b);
/// Bar involution: v -> v^-1, H_w -> (H_{w^-1})^-1.
HeckeElement bar(const HeckeElement& h);
/// H_w -> H_{w^-1}, coefficients unchanged.
HeckeElement anti_involution(const HeckeElement& h);
/// Coefficient of H_e.
LaurentPoly trace(const HeckeElement& h);

/// The two anti-involutions a considered for the Hom pairing tau(a(h1) h2).
enum class PairingConvention {
  /// a(H_w) = H_{w^-1}, a(v) = v. Matches graded Hom dimensions of Soergel modules.
  kInverseLinear,
  /// a composed with the bar involution: a(H_w) = bar(H_{w^-1}), a(v) = v^-1.
  kInverseBar,
};

/// The Kazhdan-Lusztig basis of one S_n, computed eagerly on construction by
/// the b_{ws} b_s - sum mu b_y recursion. Immutable afterwards.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(int n, int cap = kDefaultRankCap);

  [[nodiscard]] int rank() const { return group_.rank(); }
  [[nodiscard]] const WeylGroup& group() const { return group_; }

  [[nodiscard]] const HeckeElement& kl_basis(const WeylElement& w) const;
  /// Coefficient of H_x in b_w.
  [[nodiscard]] LaurentPoly kl_poly(const WeylElement& x, const WeylElement& w) const;
  /// Classical P_{x,w}(q), recovered from kl_poly via q = v^-2 and the length shift.
  [[nodiscard]] LaurentPoly classical_kl_poly(const WeylElement& x, const WeylElement& w) const;
  /// Coefficient of v in kl_poly(x, w).
  [[nodiscard]] Rational mu(const WeylElement& x, const WeylElement& w) const;

  /// b_{s_1} ... b_{s_l}; H_e for the empty word.
  [[nodiscard]] HeckeElement product_bs(const Word& word) const;
  /// Unique m_x with h = sum m_x b_x.
  [[nodiscard]] std::map<WeylElement, LaurentPoly> kl_expand(const HeckeElement& h) const;
  [[nodiscard]] HeckeElement kl_combine(const std::map<WeylElement, LaurentPoly>& coeffs) const;

  /// tau(a(h1) h2) for the chosen anti-involution a.
  [[nodiscard]] LaurentPoly pairing(const HeckeElement& h1, const HeckeElement& h2,
                                    PairingConvention conv = PairingConvention::kInverseLinear) const;

  /// Graded character: H_x -> v^-l(x). Equals the graded dimension of the
  /// corresponding Soergel module.
  [[nodiscard]] LaurentPoly character(const HeckeElement& h) const;

 private:
  WeylGroup group_;
  std::vector<HeckeElement> kl_;  // indexed by group_ index
};

}  // namespace soergel
