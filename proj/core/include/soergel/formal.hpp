#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "soergel/soergel.hpp"

namespace soergel::formal {

/// The four corners: mixed (graded, twist labels), degraded K, graded
/// perverse and ungraded perverse.
enum class Side { kMix, kK, kPervGr, kPerv };

std::string side_name(Side s);
/// MIX and PERV_GR carry twist labels.
bool is_graded(Side s);

/// (w, n): E_w(n)[2n] on the MIX side, P_w(n) on PERV_GR; n is absent on K and PERV.
struct Generator {
  WeylElement w;
  std::optional<int> n;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct FormalObject {
  Side side = Side::kMix;
  std::vector<Generator> generators;

  friend bool operator==(const FormalObject&, const FormalObject&) = default;
};

/// entries[target][source]: coordinates in the hom_rule basis of that pair.
using EntryMatrix = std::vector<std::vector<QVector>>;

/// Bounded complex over one side. d.at(c) maps terms.at(c) to terms.at(c + 1);
/// a missing differential is zero.
struct FormalComplex {
  Side side = Side::kMix;
  std::map<int, std::vector<Generator>> terms;
  std::map<int, EntryMatrix> d;

  [[nodiscard]] FormalObject object(int c) const;
  [[nodiscard]] std::size_t generator_count() const;
  friend bool operator==(const FormalComplex&, const FormalComplex&) = default;
};

/// Stalk complex: one generator at position c.
FormalComplex stalk(Side side, const Generator& g, int c = 0);
/// Adds k to every twist label; on MIX this is (k)[2k], on PERV_GR it is (k).
FormalComplex twist(const FormalComplex& x, int k);
/// MIX -> PERV_GR: same data, new interpretation.
FormalComplex gkos(const FormalComplex& x);
/// K -> PERV: same data.
FormalComplex kos_formal(const FormalComplex& x);

struct RandomOptions {
  int max_terms = 4;
  int max_generators = 3;
  int max_label = 1;  // first term only
  int max_entry = 2;
};

/// Formal complexes over the D_w of one S_n, with Hom spaces read off
/// graded Soergel Homs. Hom bases are computed on first use and cached.
class FormalCategory {
 public:
  explicit FormalCategory(int n, Limits limits = Limits::from_env());

  [[nodiscard]] int rank() const { return cat_.rank(); }
  [[nodiscard]] const SoergelCategory& soergel() const { return cat_; }
  [[nodiscard]] const std::vector<WeylElement>& elements() const { return elements_; }

  /// Centered degree of Hom(D_x, D_y) read by a graded entry (x, m) -> (y, n).
  [[nodiscard]] static int entry_degree(const Generator& src, const Generator& tgt);
  /// Basis of the allowed entries src -> tgt: a graded piece on MIX and
  /// PERV_GR, the whole ungraded Hom on K and PERV.
  [[nodiscard]] const std::vector<ModuleMap>& hom_rule(Side side, const Generator& src, const Generator& tgt) const;
  [[nodiscard]] ModuleMap materialize(Side side, const Generator& src, const Generator& tgt,
                                      const QVector& coords) const;
  [[nodiscard]] QVector coordinates(Side side, const Generator& src, const Generator& tgt,
                                    const ModuleMap& f) const;

  /// g after f, entries composed in soergel-mod.
  [[nodiscard]] EntryMatrix compose(Side side, const std::vector<Generator>& a, const std::vector<Generator>& b,
                                    const std::vector<Generator>& c, const EntryMatrix& g,
                                    const EntryMatrix& f) const;
  [[nodiscard]] bool dsquare_check(const FormalComplex& x) const;
  /// Shapes, labels and coordinate lengths agree with the side.
  [[nodiscard]] bool well_formed(const FormalComplex& x) const;

  /// MIX -> K: labels dropped, entries included into the ungraded Hom.
  [[nodiscard]] FormalComplex iota_formal(const FormalComplex& x) const;
  /// PERV_GR -> PERV, the same inclusion.
  [[nodiscard]] FormalComplex v_formal(const FormalComplex& x) const;
  /// kos(iota(X)) == v(gkos(X)) exactly.
  [[nodiscard]] bool square_check(const FormalComplex& x) const;

  /// dim Hom(X, Y[k]) in the homotopy category.
  [[nodiscard]] std::size_t hom_homotopy(const FormalComplex& x, const FormalComplex& y, int k) const;

  /// Random complex with d^2 = 0; each differential is a random element of
  /// the solution space of d^{c+1} d^c = 0.
  [[nodiscard]] FormalComplex random_complex(Side side, std::mt19937_64& rng, const RandomOptions& opt = {}) const;
  /// Every 2-term complex (x,m) -> (y,n) with one basis element as differential, |n - m| <= 1.
  [[nodiscard]] std::vector<FormalComplex> two_term_corpus(Side side) const;

 private:
  struct HomData {
    std::map<int, std::vector<ModuleMap>> by_degree;
    std::vector<ModuleMap> all;
    std::map<int, std::size_t> offset;
  };
  const HomData& hom_data(const WeylElement& x, const WeylElement& y) const;
  [[nodiscard]] QMatrix block(Side side, const Generator& src, const Generator& tgt, const QVector& coords) const;
  [[nodiscard]] FormalComplex degrade(const FormalComplex& x, Side to) const;

  SoergelCategory cat_;
  std::vector<WeylElement> elements_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<WeylElement, WeylElement>, std::unique_ptr<HomData>> homs_;
};

}  // namespace soergel::formal
