#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "tlenv/algebra.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"

using namespace tlenv;

namespace {

std::vector<TLDiagram> tensor_cell_diagrams(int max_points) {
  std::vector<TLDiagram> out;
  for (int a = 0; 2 * a <= max_points; ++a)
    for (int b = 0; 2 * a + 2 * b <= max_points; ++b)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * a, 2 * b))) out.push_back(d);
  return out;
}

GradedElement rainbow_cap_top(const GradedElement& q) {
  GradedElement out;
  for (const auto& [d, c] : q.terms()) {
    const BoxShape& s = d.shape();
    TLDiagram cap = transpose(standard::rainbow(s.top / 2));
    TLDiagram id = TLDiagram::from_pairs(BoxShape(0, 0, s.bottom, s.bottom), [&] {
      std::vector<std::pair<int, int>> p;
      for (int i = 0; i < s.bottom; ++i) p.emplace_back(i, 2 * s.bottom - 1 - i);
      return p;
    }());
    out += tl_action(cap, id, GradedElement::term(d, c));
  }
  return out;
}

}  // namespace

TEST(Linalg, SolveAndInverse) {
  ScalarMatrix g = through_gram(4);
  ScalarMatrix gi = inverse(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < g.size(); ++k) acc += g[i][k] * gi[k][j];
      EXPECT_EQ(acc, Scalar(i == j ? 1 : 0));
    }
  // det of the 2-string closure Gram: d^4 - d^2
  EXPECT_EQ(determinant(through_gram(4)), determinant(g));
  ScalarMatrix g2 = {{Scalar::delta_pow(2), Scalar::delta()}, {Scalar::delta(), Scalar::delta_pow(2)}};
  EXPECT_EQ(determinant(g2), Scalar(Poly(std::vector<mpz_class>{0, 0, -1, 0, 1})));
  EXPECT_THROW(inverse({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), DegenerateModulusError);
}

TEST(Expectation, VerticalBars) {
  GradedElement bars = GradedElement::basis(standard::vertical_bars());
  auto cupcap = TLDiagram::from_pairs(BoxShape(0, 0, 2, 2), {{0, 1}, {2, 3}});
  EXPECT_EQ(conditional_expectation(bars), GradedElement::term(cupcap, Scalar::delta_pow(-1)));
}

TEST(Expectation, AgreesWithBothGramRoutes) {
  for (const auto& d : tensor_cell_diagrams(8)) {
    GradedElement q = GradedElement::basis(d);
    GradedElement e = conditional_expectation(q);
    EXPECT_EQ(conditional_expectation_gram(q, Pairing::Tau), e) << d.to_string();
    EXPECT_EQ(conditional_expectation_gram(q, Pairing::TauPrime), e) << d.to_string();
  }
}

TEST(Expectation, IdempotentAndTracePreserving) {
  for (const auto& d : tensor_cell_diagrams(10)) {
    GradedElement q = GradedElement::basis(d);
    GradedElement e = conditional_expectation(q);
    EXPECT_EQ(conditional_expectation(e), e);
    EXPECT_EQ(v_trace(e), v_trace(q));
  }
}

TEST(Expectation, ResidualOrthogonalToEveryCell) {
  std::vector<TLDiagram> tensor;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (const auto& t : tensor_basis(2 * a, 2 * b)) tensor.push_back(t);
  for (const auto& d : tensor_cell_diagrams(8)) {
    GradedElement q = GradedElement::basis(d);
    GradedElement res = q - conditional_expectation(q);
    for (const auto& t : tensor) {
      EXPECT_TRUE(inner_product(res, GradedElement::basis(t), Pairing::Tau).is_zero());
      EXPECT_TRUE(inner_product(res, GradedElement::basis(t), Pairing::TauPrime).is_zero());
    }
  }
}

TEST(Expectation, RainbowCapOfResidualVanishes) {
  for (const auto& d : tensor_cell_diagrams(10)) {
    GradedElement q = GradedElement::basis(d);
    EXPECT_TRUE(rainbow_cap_top(q - conditional_expectation(q)).is_zero()) << d.to_string();
  }
}

TEST(Expectation, Bimodular) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    int a = oracle::uniform(rng, 0, 2), b = oracle::uniform(rng, 0, 2);
    GradedElement d = GradedElement::basis(oracle::random_diagram(BoxShape(0, 0, 2 * a, 2 * b), rng));
    auto ml = tensor_basis(2 * oracle::uniform(rng, 0, 2), 2 * oracle::uniform(rng, 0, 1));
    auto mr = tensor_basis(2 * oracle::uniform(rng, 0, 1), 2 * oracle::uniform(rng, 0, 2));
    GradedElement m1 = GradedElement::basis(ml[rng() % ml.size()]);
    GradedElement m2 = GradedElement::basis(mr[rng() % mr.size()]);
    EXPECT_EQ(conditional_expectation(v_product(v_product(m1, d), m2)),
              v_product(v_product(m1, conditional_expectation(d)), m2));
  }
}

TEST(Expectation, RejectsWrongCells) {
  GradedElement q = GradedElement::basis(TLDiagram::from_pairs(BoxShape(0, 0, 1, 1, Shading::Minus), {{0, 1}}));
  EXPECT_THROW(conditional_expectation(q), PreconditionError);
}

TEST(Expectation, DegenerateModulus) {
  GradedElement bars = GradedElement::basis(standard::vertical_bars());
  EXPECT_THROW(check_modulus(bars, 0.0), DegenerateModulusError);
  EXPECT_NO_THROW(check_modulus(bars, 1.0));
  // Four through strings: closure Gram d^4 - d^2 vanishes at d = 1.
  GradedElement four = GradedElement::basis(TLDiagram::from_pairs(BoxShape(0, 0, 4, 4), {{0, 7}, {1, 6}, {2, 5}, {3, 4}}));
  EXPECT_THROW(check_modulus(four, 1.0), DegenerateModulusError);
  EXPECT_NO_THROW(check_modulus(four, 2.0));
}

TEST(Gram, ShapeAndSymmetry) {
  ScalarMatrix g = gram_matrix(BoxShape(0, 0, 2, 2), Pairing::Tau);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0][1], g[1][0]);
}

TEST(Gram, PositiveAtTwo) {
  for (int l = 0; l <= 6; ++l)
    for (int r = 0; l + r <= 6; ++r)
      for (int t = 0; l + r + t <= 6; ++t)
        for (int b = 0; l + r + t + b <= 6; ++b) {
          if ((l + r + t + b) % 2) continue;
          BoxShape s(l, r, t, b);
          EXPECT_GE(min_gram_eigenvalue(gram_matrix(s, Pairing::TauPrime), 2.0), -1e-8);
          EXPECT_GE(min_gram_eigenvalue(gram_matrix(s, Pairing::Tau), 2.0), -1e-8);
        }
}

TEST(Gram, EmptyShapeAndUnit) {
  ScalarMatrix g = gram_matrix(BoxShape(0, 0, 0, 0), Pairing::Tau);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0][0], Scalar(1));
  GradedElement one = GradedElement::basis(standard::empty());
  EXPECT_EQ(inner_product(one, one, Pairing::Tau), Scalar(1));
  GradedElement cup = GradedElement::basis(standard::cups(1));
  EXPECT_EQ(inner_product(cup, cup, Pairing::TauPrime), Scalar::delta());
}

TEST(Gram, DifferentParityPairsToZero) {
  GradedElement a = GradedElement::basis(TLDiagram::from_pairs(BoxShape(0, 0, 1, 1, Shading::Minus), {{0, 1}}));
  GradedElement b = GradedElement::basis(standard::vertical_bars());
  EXPECT_TRUE(inner_product(a, b.with_flavor(Flavor::V), Pairing::TauPrime).is_zero());
}

TEST(Gram, StrictlyPositiveAtTwo) {
  for (int l = 0; l <= 8; ++l)
    for (int r = 0; l + r <= 8; ++r)
      for (int t = 0; l + r + t <= 8; ++t)
        for (int b = 0; l + r + t + b <= 8; ++b) {
          if ((l + r + t + b) % 2) continue;
          BoxShape s(l, r, t, b);
          EXPECT_GE(min_gram_eigenvalue(gram_matrix(s, Pairing::TauPrime), 2.0), 1e-10) << s.to_string();
          EXPECT_GE(min_gram_eigenvalue(gram_matrix(s, Pairing::Tau), 2.0), 1e-10) << s.to_string();
        }
}
