#include <gtest/gtest.h>

#include "strops/qops.hpp"

namespace strops {
namespace {

TEST(Q, ProjectiveSpace) {
  auto ctx = q_context(rpn(5));
  auto alpha = Element::generator(ctx.intersection.ring, "alpha");
  // alpha in HH_{-1}: Q_1 = id, Q_0 = alpha^2
  EXPECT_EQ(q_op(1, alpha, ctx), alpha);
  EXPECT_EQ(q_op(0, alpha, ctx), alpha * alpha);
  EXPECT_TRUE(q_op(2, alpha, ctx).is_zero());
  // alpha^2 in HH_{-2}: Q_1 = PD(Sq^1) which is zero on a^2
  EXPECT_TRUE(q_op(1, alpha.pow(2), ctx).is_zero());
  // alpha^3: Q_2 = PD(Sq^1) a^3 = a^4
  EXPECT_EQ(q_op(2, alpha.pow(3), ctx), alpha.pow(4));
  EXPECT_TRUE(q_op(0, Element(ctx.intersection.ring), ctx).is_zero());
  EXPECT_THROW(q_op(-1, alpha, ctx), DomainError);
  EXPECT_THROW(q_op(0, alpha + alpha.pow(2), ctx), DomainError);
}

TEST(Q, RequiresF2AndAction) {
  EXPECT_THROW(q_context(cpn(2)), DomainError);
  EXPECT_NO_THROW(q_context(cpn(2, Coefficients::prime_field(2))));
}

TEST(Q, RelationReports) {
  for (const auto& m : {rpn(4), rpn(6), grassmannian2(4), grassmannian2(5), product(rpn(2), rpn(2))}) {
    auto report = relation_check(q_context(m), 8);
    for (const auto& r : report.results) {
      if (r.verified) {
        EXPECT_EQ(r.failures, 0u) << m->name << ": " << r.name << " at " << r.first_failure;
        EXPECT_GT(r.instances, 0u) << r.name;
      }
    }
    EXPECT_TRUE(report.all_passed());
  }
}

TEST(Browder, VanishesWithDegree) {
  auto ctx = q_context(cpn(2, Coefficients::prime_field(2)));
  auto c = Element::generator(ctx.intersection.ring, "c");
  auto v = browder(c, c, ctx);
  EXPECT_TRUE(v.value.is_zero());
  EXPECT_EQ(v.degree, -2 - 2 + 4 - 1);
  EXPECT_THROW(browder(Element::one(q_context(rpn(2)).intersection.ring), Element::one(q_context(rpn(2)).intersection.ring),
                       q_context(rpn(2))),
               DomainError);
}

}  // namespace
}  // namespace strops
