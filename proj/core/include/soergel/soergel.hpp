#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "soergel/coinvariant.hpp"
#include "soergel/errors.hpp"
#include "soergel/graded_module.hpp"
#include "soergel/hecke.hpp"

namespace soergel {

/// One summand D_w<shift> of a decomposition, with its split inclusion and
/// projection into the decomposed module.
struct Summand {
  WeylElement w;
  int shift = 0;
  ModuleMap inclusion;   // D_w<shift> -> M
  ModuleMap projection;  // M -> D_w<shift>
};

struct Decomposition {
  std::vector<Summand> summands;

  /// Multiset of (w, shift) as a sorted map to multiplicities.
  [[nodiscard]] std::map<std::pair<WeylElement, int>, int> multiset() const;
};

/// Read a KL expansion sum m_x b_x as the expected summands: v^j in m_x
/// means D_x<-j>, with multiplicity the coefficient.
std::map<std::pair<WeylElement, int>, int> expected_summands(const std::map<WeylElement, LaurentPoly>& kl);

/// Basis of a Hom block of an endomorphism algebra.
struct EndoBasisElement {
  std::size_t source = 0;  // index into the summand list
  std::size_t target = 0;
  int degree = 0;
  ModuleMap map;
};

/// A = End(sum_i D_{w_i}<shift_i>) with a homogeneous basis adapted to the
/// blocks Hom(D_i, D_j)_d. Multiplication is composition: a * b = a after b.
class EndoAlgebra {
 public:
  EndoAlgebra(std::vector<std::pair<WeylElement, int>> summands, std::vector<GradedModule> modules,
              std::vector<EndoBasisElement> basis);

  [[nodiscard]] const std::vector<std::pair<WeylElement, int>>& summands() const { return summands_; }
  [[nodiscard]] const GradedModule& module(std::size_t i) const { return modules_[i]; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<EndoBasisElement>& basis() const { return basis_; }
  [[nodiscard]] std::map<int, std::size_t> graded_dims() const;
  /// Basis indices of the block Hom(D_source, D_target)_degree.
  [[nodiscard]] std::vector<std::size_t> block(std::size_t source, std::size_t target, int degree) const;
  /// Basis index of the identity of summand i.
  [[nodiscard]] std::size_t idempotent(std::size_t i) const { return idempotents_[i]; }

  /// Coordinates of a * b, zero when the blocks do not compose.
  [[nodiscard]] QVector multiply(std::size_t a, std::size_t b) const;
  /// Coordinates of a map D_source -> D_target of the given degree.
  [[nodiscard]] QVector coordinates(std::size_t source, std::size_t target, const ModuleMap& f) const;
  /// Full table: structure_constants()[a][b] = coordinates of a * b.
  [[nodiscard]] std::vector<std::vector<QVector>> structure_constants() const;

 private:
  std::vector<std::pair<WeylElement, int>> summands_;
  std::vector<GradedModule> modules_;
  std::vector<EndoBasisElement> basis_;
  std::vector<std::size_t> idempotents_;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<std::size_t>> blocks_;
};

/// Soergel modules over the coinvariant algebra of one S_n: Bott-Samelson
/// induction, graded Hom, decomposition and the indecomposables D_w.
///
/// D_w is centered so that its character is bar-invariant; it is cached on
/// first use. The cache takes a shared lock for reads and an exclusive lock
/// for inserts, so a category may be shared between threads.
class SoergelCategory {
 public:
  explicit SoergelCategory(int n, Limits limits = Limits::from_env());

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const Limits& limits() const { return limits_; }
  [[nodiscard]] const CoinvariantRing& ring() const { return ring_; }
  [[nodiscard]] const HeckeAlgebra& hecke() const { return hecke_; }

  [[nodiscard]] GradedModule trivial_module() const;
  /// C as a module over itself, in degrees 0..n(n-1).
  [[nodiscard]] GradedModule regular_module() const;
  /// (C tensor_{C^{s_i}} M)<1>, built as an explicit quotient of C tensor_Q M.
  [[nodiscard]] GradedModule induct(int i, const GradedModule& m) const;
  [[nodiscard]] GradedModule bott_samelson(const Word& word) const;

  [[nodiscard]] std::vector<ModuleMap> hom_graded(const GradedModule& m, const GradedModule& n, int d) const;
  [[nodiscard]] LaurentPoly hom_character(const GradedModule& m, const GradedModule& n) const;

  /// Splits off the expected summands in turn; the remainder must vanish.
  [[nodiscard]] Decomposition decompose(const GradedModule& m,
                                        const std::map<std::pair<WeylElement, int>, int>& expected) const;
  /// Bott-Samelson module of `word`, decomposed against kl_expand(product_bs(word)).
  [[nodiscard]] Decomposition decompose_bs(const Word& word) const;
  /// No oracle: tries every D_x<k> that fits, splitting off as many copies
  /// as the rank of the composition pairing Hom(D, M)_0 x Hom(M, D)_0.
  [[nodiscard]] Decomposition decompose_search(const GradedModule& m) const;

  [[nodiscard]] const GradedModule& indecomposable(const WeylElement& w) const;

  /// sum over summands (w, k) of v^-k b_w.
  [[nodiscard]] HeckeElement hecke_class(const Decomposition& d) const;
  [[nodiscard]] HeckeElement hecke_class(const GradedModule& m) const;

  [[nodiscard]] EndoAlgebra endo_algebra(const std::vector<std::pair<WeylElement, int>>& summands) const;

 private:
  struct Piece;
  // Splits one copy of D off `cur`, or returns false when no splitting exists.
  bool split_one(Piece& cur, const WeylElement& x, int k, Decomposition& out) const;
  void check_dim(std::size_t d, const char* what) const;

  int n_;
  Limits limits_;
  CoinvariantRing ring_;
  HeckeAlgebra hecke_;
  std::vector<std::vector<CoinvariantElement>> gens_;  // generators of C^{s_i}
  std::vector<QMatrix> ring_mult_;                     // multiplication by each basis monomial of C

  mutable std::shared_mutex cache_mutex_;
  mutable std::map<WeylElement, std::shared_ptr<const GradedModule>> cache_;
};

}  // namespace soergel
