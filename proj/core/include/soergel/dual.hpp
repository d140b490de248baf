#pragma once

#include <map>
#include <vector>

#include "soergel/soergel.hpp"

namespace soergel::dual {

/// Sum of graded projectives P_x<shift>, x an index into the element list.
struct ProjectiveTerm {
  std::vector<std::pair<std::size_t, int>> summands;
};

/// Minimal graded projective resolution of the simple L_x. `complete` is false
/// when max_len was reached with a nonzero kernel left over.
struct Resolution {
  std::size_t simple = 0;
  std::vector<ProjectiveTerm> terms;
  bool complete = false;
};

/// Ext^k between two simples. `graded` is keyed by internal degree in the
/// deg-2 convention (twice the Soergel module degree).
struct ExtDims {
  std::size_t dim = 0;
  std::map<int, std::size_t> graded;
};

/// A = End(sum_w D_w) with left modules A e_x as the indecomposable
/// projectives. Positively graded with A_0 spanned by the idempotents; the
/// constructor verifies both.
class DualAlgebra {
 public:
  explicit DualAlgebra(const SoergelCategory& cat);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<WeylElement>& elements() const { return elements_; }
  [[nodiscard]] std::size_t index(const WeylElement& w) const;
  [[nodiscard]] const EndoAlgebra& algebra() const { return alg_; }
  [[nodiscard]] std::size_t dim() const { return alg_.dim(); }

  /// C(x, y) = dim e_y A e_x.
  [[nodiscard]] std::vector<std::vector<std::size_t>> cartan() const;
  /// Graded refinement of C(x, y) as a polynomial in v (Soergel module degree).
  [[nodiscard]] LaurentPoly cartan_graded(std::size_t x, std::size_t y) const;
  /// Inverse of the Cartan matrix, same indexing.
  [[nodiscard]] QMatrix inverse_cartan() const;

  /// Iterated kernel-and-cover on L_x; at most max_len + 1 terms.
  [[nodiscard]] Resolution resolve(std::size_t x, std::size_t max_len = 16) const;
  /// Read from a minimal resolution: the multiplicity of P_y<d> in term k.
  [[nodiscard]] static ExtDims ext_dims(const Resolution& r, std::size_t y, std::size_t k);

 private:
  struct Module;
  using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
  [[nodiscard]] QVector act(std::size_t a, const Module& f, const QVector& v) const;

  int rank_;
  std::vector<WeylElement> elements_;
  EndoAlgebra alg_;
  std::vector<std::vector<SparseVec>> mult_;            // mult_[a][b] = a * b
  std::vector<std::vector<std::size_t>> with_source_;   // basis of A e_x
  std::vector<std::size_t> local_;                      // position of a basis element in its A e_x
  std::vector<std::size_t> rad_generators_;             // spans A_+ modulo A_+^2
};

struct KoszulReport {
  bool koszul = true;
  bool complete = true;
  int max_k = 0;
};

/// Every nonzero graded Ext^k(L_x, L_y) sits in internal degree 2k.
KoszulReport koszulity_check(const DualAlgebra& a, std::size_t max_len = 16);

}  // namespace soergel::dual
