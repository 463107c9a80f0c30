#include <gtest/gtest.h>

#include "strops/manifold_catalog.hpp"
#include "strops/steenrod.hpp"

namespace strops {
namespace {

TEST(TwistedSq, UntwistedWhenTrivial) {
  auto m = rpn(3);  // w(RP^3) = (1+a)^4 = 1
  auto t = minus_tangent(m);
  auto a = Element::generator(m->cohomology, "a");
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(twisted_sq(i, a, t, *m->sq), sq(i, a, *m->sq));
}

TEST(TwistedSq, RpTwo) {
  // w(-T RP^2) = (1+a)^{-3} = (1+a)(1+a)^{-4} = 1 + a
  auto m = rpn(2);
  auto t = minus_tangent(m);
  auto a = Element::generator(m->cohomology, "a");
  EXPECT_EQ(t.w(1), a);
  EXPECT_TRUE(t.w(2).is_zero());
  EXPECT_EQ(twisted_sq(1, Element::one(m->cohomology), t, *m->sq), a);
  EXPECT_TRUE(twisted_sq(1, a, t, *m->sq).is_zero());  // a^2 + a^2
}

TEST(TwistedSq, RightActionIsDual) {
  auto m = grassmannian2(5);
  auto t = minus_tangent(m);
  for (int k = 1; k <= m->dim; ++k) {
    for (const auto& b : m->cohomology->basis_in_degree(k)) {
      HomologyClass y = poincare_dual(m, Element::monomial(m->cohomology, b));
      if (y.degree < 1) continue;
      auto ys = right_action(y, 1, t);
      EXPECT_EQ(ys.degree, y.degree - 1);
      for (const auto& c : m->cohomology->basis_in_degree(ys.degree)) {
        Element x = Element::monomial(m->cohomology, c);
        EXPECT_EQ(kronecker(x, ys), kronecker(twisted_sq(1, x, t, *m->sq), y));
      }
    }
  }
}

TEST(TwistedSq, MatrixColumns) {
  auto m = rpn(4);
  auto t = minus_tangent(m);  // w1(-T) = a
  Matrix s = twisted_sq_matrix(1, 1, m, t);
  ASSERT_EQ(s.size(), 1u);
  // Sq^1_t a = a^2 + a * w1(-T) = a^2 + a^2 = 0
  EXPECT_EQ(s[0][0], Integer(0));
  s = twisted_sq_matrix(1, 2, m, t);
  EXPECT_EQ(s[0][0], Integer(1));  // Sq^1 a^2 = 0, plus a^2 * a
}

TEST(Wu, RuleAgreesWithDirectComputation) {
  std::vector<ManifoldPtr> spaces{rpn(2), rpn(3), rpn(4), rpn(5), grassmannian2(4), grassmannian2(5), grassmannian2(6),
                                  product(rpn(2), rpn(3)), product(rpn(3), sphere(1, Coefficients::prime_field(2))),
                                  cpn(3, Coefficients::prime_field(2))};
  for (const auto& m : spaces) {
    bool orientable = m->sw_tangent->total.component(1).is_zero();
    EXPECT_EQ(wu_surjectivity_test({m->dim, orientable, true}), top_sq1_surjective(m)) << m->name;
  }
  EXPECT_FALSE(wu_surjectivity_test({0, false, true}));
  EXPECT_THROW(wu_surjectivity_test({3, false, false}), DomainError);
  EXPECT_THROW(top_sq1_surjective(o2_space()), DomainError);  // two components
}

}  // namespace
}  // namespace strops
