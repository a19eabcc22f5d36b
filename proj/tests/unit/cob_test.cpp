#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "tlenv/algebra.hpp"
#include "tlenv/cob.hpp"
#include "tlenv/errors.hpp"

using namespace tlenv;

namespace {

GradedElement random_element(const BoxShape& s, std::mt19937_64& rng) {
  GradedElement e;
  int terms = oracle::uniform(rng, 1, 3);
  for (int i = 0; i < terms; ++i) e.add_term(oracle::random_diagram(s, rng), Scalar(oracle::uniform(rng, -3, 3)));
  return e;
}

}  // namespace

TEST(Lists, EpiCountsMatchFiltering) {
  for (int s = 0; s <= 8; ++s)
    for (int s2 = s % 2; s2 <= s; s2 += 2) {
      std::size_t epi = 0, nn = 0;
      for (const auto& m : oracle::all_noncrossing(s + s2)) {
        BoxShape sh(0, 0, s2, s);
        // every top point meets a bottom point
        bool is_epi = true, adjacent = true;
        for (int p = 0; p < s2; ++p) is_epi = is_epi && m[p] >= s2;
        for (int i = s2; i < s + s2; ++i)
          if (m[i] >= s2 && m[i] > i && m[i] != i + 1) adjacent = false;
        (void)sh;
        if (is_epi) ++epi;
        if (is_epi && adjacent) ++nn;
      }
      EXPECT_EQ(epi_diagrams(s, s2)->size(), epi);
      EXPECT_EQ(nonnested_epi_diagrams(s, s2)->size(), nn);
      EXPECT_EQ(monic_diagrams(s, s2)->size(), epi);
    }
}

TEST(Cob, CupExample) {
  GradedElement cup_w = GradedElement::basis(standard::cups(1), Flavor::W);
  GradedElement expect = GradedElement::basis(standard::cups(1)) -
                         GradedElement::term(standard::empty(), Scalar::delta());
  EXPECT_EQ(map_Y(cup_w), expect);
  EXPECT_EQ(map_X(expect), cup_w);
}

TEST(Cob, InverseOnAllBasisCells) {
  for (int l = 0; l <= 8; ++l)
    for (int r = 0; l + r <= 8; ++r)
      for (int t = 0; l + r + t <= 8; ++t)
        for (int b = 0; l + r + t + b <= 8; ++b) {
          if ((l + r + t + b) % 2) continue;
          for (const auto& d : enumerate_matchings(BoxShape(l, r, t, b))) {
            GradedElement v = GradedElement::basis(d);
            GradedElement w = GradedElement::basis(d, Flavor::W);
            ASSERT_EQ(map_Y(map_X(v)), v) << d.to_string();
            ASSERT_EQ(map_X(map_Y(w)), w) << d.to_string();
          }
        }
}

TEST(Cob, Homomorphism) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    BoxShape a = oracle::random_shape(8, rng);
    BoxShape b = oracle::random_shape(8, rng);
    b.left = a.right;
    b.shading = flip_if_odd(a.shading, a.top);
    if (b.size() % 2) b.bottom += 1;
    GradedElement x = random_element(a, rng), y = random_element(b, rng);
    EXPECT_EQ(map_X(v_product(x, y)), w_product(map_X(x), map_X(y)));
    EXPECT_EQ(map_X(dagger(x)), dagger(map_X(x)));
    if (a.left == a.right) EXPECT_EQ(w_trace(map_X(x)), v_trace(x));
  }
}

TEST(Cob, FlavorChecked) {
  GradedElement v = GradedElement::basis(standard::cups(1));
  EXPECT_THROW(map_Y(v), PreconditionError);
  EXPECT_THROW(map_X(v.with_flavor(Flavor::W)), PreconditionError);
}
