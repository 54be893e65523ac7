#include <doctest.h>

#include "fixtures.hpp"
#include "ihara/errors.hpp"
#include "ihara/lfunctions.hpp"

using namespace ihara;
using namespace fixtures;

namespace {

CycPoly cyc(unsigned m, const IntPoly& p) { return CycPoly::from_int_poly(m, p); }

}  // namespace

TEST_CASE("L-functions of the worked covers") {
  const DerivedCover c = c3_double();
  const LData triv = l_reciprocal(c, Character{{0}});
  CHECK(triv.reciprocal == cyc(2, IntPoly{1, 0, 0, -1}.pow(2)));
  CHECK(triv.order == 2);
  CHECK(triv.lead == CyclotomicInteger(2, 9));
  const LData odd = l_reciprocal(c, Character{{1}});
  CHECK(odd.reciprocal == cyc(2, IntPoly{1, 0, 0, 1}.pow(2)));
  CHECK(odd.order == 0);
  CHECK(odd.lead == CyclotomicInteger(2, 4));

  const LData t = l_reciprocal(theta_double(), Character{{1}});
  CHECK(t.order == 1);
  CHECK(t.lead == CyclotomicInteger(2, -16));

  for (const auto& c2 : {k4_klein(), theta_double()}) {
    const LData l = l_reciprocal(c2, c2.group().character(0));
    CHECK(l.reciprocal.to_int_poly() == zeta_reciprocal(c2.base()).reciprocal);
  }

  const DerivedCover split = derive(graphs::cycle(3), voltages({2}, {{0}, {0}, {0}}));
  CHECK_THROWS_AS(l_reciprocal(split, Character{{1}}), DisconnectedCoverError);
  CHECK_THROWS_AS(all_l_functions(split), DisconnectedCoverError);
}

TEST_CASE("all_l_functions follows character order") {
  const DerivedCover c = k4_klein();
  const auto ls = all_l_functions(c);
  REQUIRE(ls.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(ls[i].character == c.group().character(i));
}

TEST_CASE("orders and special values of L-functions") {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2}, {3}, {4}, {2, 2}, {6}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(51, g, 5, 5, 9)) {
      const long r = betti(c.base());
      const auto ls = all_l_functions(c);
      const auto& d = matrices(c.base()).degree;
      for (const auto& l : ls) {
        if (is_trivial(l.character)) {
          CHECK(l.order == unsigned(r));
          continue;
        }
        CHECK(l.order == unsigned(r - 1));
        // L*(1, χ) = (-2)^{r-1}·det(D - A_χ).
        CycMatrix m = a_chi(c, l.character);
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m.size(); ++j)
            m[i][j] = CyclotomicInteger(g.exponent(), d(i, j)) - m[i][j];
        Integer scale = 1;
        for (long k = 0; k < r - 1; ++k) scale *= -2;
        CHECK(l.lead == cyclotomic_det(m, g.exponent()) * scale);
      }
    }
  }
}

TEST_CASE("theta elements") {
  const FiniteAbelianGroup z2({2});
  const auto one = GroupRingElement::one(z2), sigma = GroupRingElement::basis(z2, 1);
  CHECK(theta_element(c3_double()).value == one * Integer(2) - sigma * Integer(2));
  CHECK(gr_det(theta_matrix(c3_double()), z2) == one * Integer(2) - sigma * Integer(2));
  CHECK(theta_element(theta_double()).value == sigma * Integer(8) - one * Integer(8));

  const auto triv = theta_element(trivial_cover(graphs::complete(4))).value;
  CHECK(triv.is_zero());
  CHECK(triv.group().order() == 1);
}

TEST_CASE("theta element matches L-values on random covers") {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2}, {3}, {4}, {2, 2}, {6}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(61, g, 4, 5, 9)) {
      const auto ls = all_l_functions(c);
      const auto theta = theta_element(c, ls).value;
      CHECK(theta.augmentation() == 0);
      Integer scale = 1;
      for (long k = 0; k < betti(c.base()) - 1; ++k) scale *= -2;
      CHECK(theta == gr_det(theta_matrix(c), g) * scale);
      for (const auto& l : ls) {
        const auto image = gr_apply_char(theta, conj(g, l.character));
        if (is_trivial(l.character))
          CHECK(image.is_zero());
        else
          CHECK(image == l.lead);
      }
    }
  }
}

TEST_CASE("product formula") {
  CHECK(product_check(c3_double()));
  CHECK(product_check(theta_double()));
  CHECK(product_check(trivial_cover(graphs::theta())));
  CHECK(product_check(k4_klein()));
  const auto ls = all_l_functions(c3_double());
  CHECK(ls[0].reciprocal * ls[1].reciprocal == cyc(2, zeta_reciprocal(graphs::cycle(6)).reciprocal));
}
