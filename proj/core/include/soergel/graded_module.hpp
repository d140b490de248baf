#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "soergel/coinvariant.hpp"
#include "soergel/laurent.hpp"
#include "soergel/qmatrix.hpp"

namespace soergel {

/// Finite-dimensional graded module over the coinvariant algebra of S_n.
///
/// The basis is sorted by degree; each x_i is a full dim x dim matrix that
/// raises degree by 2. Validation checks commutativity and that every
/// elementary symmetric polynomial in the actions vanishes.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(int n, std::vector<int> degrees, std::vector<QMatrix> actions);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return degrees_.size(); }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] int degree(std::size_t i) const { return degrees_[i]; }
  [[nodiscard]] const QMatrix& action(int i) const { return actions_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<QMatrix>& actions() const { return actions_; }

  /// First basis index of degree d and the number of basis vectors in it.
  [[nodiscard]] std::size_t offset(int d) const;
  [[nodiscard]] std::size_t dim(int d) const;
  [[nodiscard]] std::map<int, std::size_t> graded_dims() const;
  [[nodiscard]] int min_degree() const { return degrees_.empty() ? 0 : degrees_.front(); }
  [[nodiscard]] int max_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }

  /// Throws std::logic_error when an invariant fails.
  void validate() const;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  int n_ = 1;
  std::vector<int> degrees_;
  std::vector<QMatrix> actions_;
};

/// Homogeneous C-linear map; `matrix` is target.dim() x source.dim().
struct ModuleMap {
  int degree = 0;
  QMatrix matrix;
};

/// Sum_d dim M_d v^d.
LaurentPoly character(const GradedModule& m);

/// M<k>: M<k>_d = M_{d+k}.
GradedModule shift(const GradedModule& m, int k);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Matrix of a polynomial in the x's acting on M.
QMatrix evaluate_action(const GradedModule& m, const MultiPoly& p);

/// True iff f is homogeneous of its degree and commutes with every x_i.
bool is_homomorphism(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap identity_map(const GradedModule& m);

/// The submodule spanned by the columns of `basis` (homogeneous, closed
/// under the action), with its inclusion and a left inverse of the inclusion.
struct Submodule {
  GradedModule module;
  QMatrix inclusion;  // ambient.dim() x module.dim()
  QMatrix retraction;  // module.dim() x ambient.dim(), retraction * inclusion = 1
};
Submodule restrict_to(const GradedModule& ambient, const std::vector<QVector>& basis);

/// Graded Hom spaces via a presentation of the source: a minimal set of
/// generators and all relations among them. Reusable across degrees and
/// targets.
class Presentation {
 public:
  Presentation(const CoinvariantRing& ring, const GradedModule& m);

  [[nodiscard]] const std::vector<std::size_t>& generators() const { return gens_; }

  /// Basis of Hom(M, N)_d.
  [[nodiscard]] std::vector<ModuleMap> hom(const GradedModule& n, int d) const;
  [[nodiscard]] std::size_t hom_dim(const GradedModule& n, int d) const;

 private:
  struct Relation {
    int degree;
    // (ring basis index, generator position, coefficient)
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
  };
  [[nodiscard]] QMatrix system(const GradedModule& n, int d, std::vector<std::size_t>& unknown_offsets) const;

  const CoinvariantRing* ring_;
  GradedModule m_;
  std::vector<std::size_t> gens_;  // basis indices of M that generate it
  std::vector<Relation> relations_;
  // Section of the presentation map: M -> free module, as (ring index, generator) coefficients.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> section_;
};

/// Matrices of the staircase basis monomials acting on M.
std::vector<QMatrix> monomial_actions(const CoinvariantRing& ring, const GradedModule& m);

/// Basis of Hom(M, N)_d.
std::vector<ModuleMap> hom_graded(const CoinvariantRing& ring, const GradedModule& m, const GradedModule& n,
                                  int d);
/// Sum_d dim Hom(M, N)_d v^d.
LaurentPoly hom_character(const CoinvariantRing& ring, const GradedModule& m, const GradedModule& n);

/// Independent oracle: dim Hom(M, N)_d by solving x_i F = F x_i directly on
/// the degree-d block entries.
std::size_t hom_dim_bruteforce(const GradedModule& m, const GradedModule& n, int d);
/// dim of all C-linear maps M -> N, no grading constraint.
std::size_t hom_dim_ungraded(const GradedModule& m, const GradedModule& n);

}  // namespace soergel
