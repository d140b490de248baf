#include <doctest.h>

#include "soergel/dual.hpp"

using namespace soergel;
using namespace soergel::dual;

namespace {

void check_euler(const DualAlgebra& a) {
  QMatrix inv = a.inverse_cartan();
  const std::size_t n = a.elements().size();
  for (std::size_t x = 0; x < n; ++x) {
    Resolution r = a.resolve(x);
    REQUIRE(r.complete);
    for (std::size_t y = 0; y < n; ++y) {
      long long chi = 0;
      for (std::size_t k = 0; k < r.terms.size(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<long long>(DualAlgebra::ext_dims(r, y, k).dim);
      CHECK(Rational(chi) == inv(x, y));
    }
  }
}

}  // namespace

TEST_CASE("rank one") {
  SoergelCategory cat(1);
  DualAlgebra a(cat);
  CHECK(a.dim() == 1);
  Resolution r = a.resolve(0);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 1);
  CHECK(DualAlgebra::ext_dims(r, 0, 0).dim == 1);
  CHECK(DualAlgebra::ext_dims(r, 0, 1).dim == 0);
  CHECK(koszulity_check(a).koszul);
}

TEST_CASE("S2 dual algebra") {
  SoergelCategory cat(2);
  DualAlgebra a(cat);
  CHECK(a.dim() == 5);
  auto c = a.cartan();
  CHECK(c == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 2}});
  const std::size_t e = a.index(WeylElement::parse("12")), s = a.index(WeylElement::parse("21"));
  // 0 -> P_e<2> -> P_s<1> -> P_e -> L_e
  Resolution re = a.resolve(e);
  REQUIRE(re.terms.size() == 3);
  CHECK(re.terms[1].summands == std::vector<std::pair<std::size_t, int>>{{s, 1}});
  CHECK(re.terms[2].summands == std::vector<std::pair<std::size_t, int>>{{e, 2}});
  ExtDims x = DualAlgebra::ext_dims(re, s, 1);
  CHECK(x.dim == 1);
  CHECK(x.graded == std::map<int, std::size_t>{{2, 1}});
  check_euler(a);
  auto k = koszulity_check(a);
  CHECK(k.koszul);
  CHECK(k.max_k == 2);
}

TEST_CASE("S3 dual algebra") {
  SoergelCategory cat(3);
  DualAlgebra a(cat);
  const auto& hk = cat.hecke();
  auto c = a.cartan();
  for (std::size_t x = 0; x < a.elements().size(); ++x)
    for (std::size_t y = 0; y < a.elements().size(); ++y) {
      const auto& wx = a.elements()[x];
      const auto& wy = a.elements()[y];
      CHECK(c[x][y] == hom_dim_ungraded(cat.indecomposable(wx), cat.indecomposable(wy)));
      CHECK(a.cartan_graded(x, y) == hk.pairing(hk.kl_basis(wx), hk.kl_basis(wy)));
    }
  check_euler(a);
  auto k = koszulity_check(a);
  CHECK(k.koszul);
  CHECK(k.complete);
  CHECK(k.max_k == 6);
}
