#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "soergel/qmatrix.hpp"

namespace soergel::tate {

/// Bounded complex of finite-dimensional Q-vector spaces. d.at(c) maps
/// degree c to degree c + 1; missing entries are zero maps.
struct UngradedComplex {
  std::map<int, std::size_t> dims;
  std::map<int, QMatrix> d;

  [[nodiscard]] std::size_t dim(int c) const;
  /// Differential out of degree c, as a dim(c+1) x dim(c) matrix (possibly zero).
  [[nodiscard]] QMatrix differential(int c) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool dsquare_zero() const;
  /// Drops zero components and zero differentials.
  [[nodiscard]] UngradedComplex normalized() const;
  /// Cohomology dimension per degree (zero entries dropped).
  [[nodiscard]] std::map<int, std::size_t> cohomology() const;
  friend bool operator==(const UngradedComplex&, const UngradedComplex&) = default;
};

/// Complex of graded vector spaces; morphisms preserve the internal degree g,
/// so it is a direct sum of strands, one ungraded complex per g. The simple
/// Q(p)[q] sits at c = -q, g = -p.
struct BigradedComplex {
  std::map<int, UngradedComplex> strands;

  [[nodiscard]] std::size_t dim(int c, int g) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool dsquare_zero() const;
  [[nodiscard]] BigradedComplex normalized() const;
  /// (c, g) -> dimension of cohomology.
  [[nodiscard]] std::map<std::pair<int, int>, std::size_t> cohomology() const;
  friend bool operator==(const BigradedComplex&, const BigradedComplex&) = default;
};

/// Q(-g)[-c]: one dimension at (c, g), zero differential.
BigradedComplex simple(int c, int g);
/// Weight 2p - q of Q(p)[q], i.e. c - 2g.
int weight_of(int c, int g);

BigradedComplex direct_sum(const BigradedComplex& a, const BigradedComplex& b);
UngradedComplex direct_sum(const UngradedComplex& a, const UngradedComplex& b);
/// X[k]: component c moves to c - k, differentials multiplied by (-1)^k.
UngradedComplex shift(const UngradedComplex& x, int k);
BigradedComplex shift(const BigradedComplex& x, int k);
/// X(p)[q]: twist and shift together, (c, g) -> (c - q, g - p).
BigradedComplex twist_shift(const BigradedComplex& x, int p, int q);

/// Forgets the internal degree: (c, g) lands in degree c - 2g.
UngradedComplex iota_collapse(const BigradedComplex& x);

/// Zero-differential complex with the cohomology of x (homotopy equivalent over Q).
UngradedComplex minimize(const UngradedComplex& x);
BigradedComplex minimize(const BigradedComplex& x);

/// Smart truncations: tau<=m keeps ... -> x^{m-1} -> ker d^m, tau>=m keeps coker d^{m-1} -> x^{m+1} -> ...
UngradedComplex t_truncate_leq(const UngradedComplex& x, int m);
UngradedComplex t_truncate_geq(const UngradedComplex& x, int m);
BigradedComplex t_truncate_leq(const BigradedComplex& x, int m);
BigradedComplex t_truncate_geq(const BigradedComplex& x, int m);
/// Weight truncations on the minimized complex: keep the simples of weight <= m (>= m).
/// On the ungraded side a simple in degree c has weight c.
UngradedComplex w_truncate_leq(const UngradedComplex& x, int m);
UngradedComplex w_truncate_geq(const UngradedComplex& x, int m);
BigradedComplex w_truncate_leq(const BigradedComplex& x, int m);
BigradedComplex w_truncate_geq(const BigradedComplex& x, int m);

/// dim Hom(X, Y[k]) in the homotopy category: chain maps modulo null-homotopic ones.
std::size_t hom_homotopy(const UngradedComplex& x, const UngradedComplex& y, int k);
/// Graded side: strands with different g do not interact.
std::size_t hom_homotopy(const BigradedComplex& x, const BigradedComplex& y, int k);

/// Random bounded complex with d^2 = 0, support c in [-c_span, c_span], g in
/// [-g_span, g_span], component dimensions at most max_dim.
BigradedComplex random_complex(std::mt19937_64& rng, int c_span = 3, int g_span = 2, std::size_t max_dim = 2);
UngradedComplex random_ungraded(std::mt19937_64& rng, int c_span = 3, std::size_t max_dim = 2);

/// Outcome of an axiom check over a finite sample; `failures` names each failed condition.
struct AxiomReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// t-structure: nesting of the aisles under shift, Hom(t<=0 X, t>=1 Y) = 0,
/// and X split as t<=0 X plus t>=1 X.
AxiomReport check_t_axioms(const std::vector<BigradedComplex>& sample);
AxiomReport check_t_axioms(const std::vector<UngradedComplex>& sample);
/// Weight structure: nesting, Hom(w>=0 X, w<=-1 Y) = 0, and X split as
/// w<=-1 X plus w>=0 X.
AxiomReport check_w_axioms(const std::vector<BigradedComplex>& sample);
AxiomReport check_w_axioms(const std::vector<UngradedComplex>& sample);

/// Every simple of minimize(x) has weight <= 0 (resp. >= 0).
bool weights_leq(const BigradedComplex& x, int m);
bool weights_geq(const BigradedComplex& x, int m);
/// Every nonzero cohomology of x sits in degree <= m (resp. >= m).
bool degrees_leq(const UngradedComplex& x, int m);
bool degrees_geq(const UngradedComplex& x, int m);
bool degrees_leq(const BigradedComplex& x, int m);
bool degrees_geq(const BigradedComplex& x, int m);

}  // namespace soergel::tate
