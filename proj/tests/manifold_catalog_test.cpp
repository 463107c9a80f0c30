#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strops/manifold_catalog.hpp"

namespace strops {
namespace {

const Coefficients Z = Coefficients::integers();
const Coefficients F2 = Coefficients::prime_field(2);

std::size_t total_rank(const ManifoldPtr& m) {
  std::size_t n = 0;
  for (int k = 0; k <= m->dim; ++k) n += m->cohomology->basis_in_degree(k).size();
  return n;
}

TEST(Catalog, BettiNumbers) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(total_rank(cpn(n)), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(total_rank(rpn(n)), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(total_rank(sphere(n)), 2u);
  }
  // Gr_{2,n}: C(n,2) cells, Poincare polynomial (1-t^n)(1-t^{n-1}) / ((1-t)(1-t^2)).
  for (int n = 3; n <= 7; ++n) {
    auto g = grassmannian2(n);
    EXPECT_EQ(g->dim, 2 * (n - 2));
    EXPECT_EQ(total_rank(g), static_cast<std::size_t>(n * (n - 1) / 2));
    for (int k = 0; k <= g->dim; ++k) {
      std::size_t cells = 0;  // partitions of k into a <= b parts with n-2 >= a >= b >= 0... counted directly
      for (int a = 0; a <= n - 2; ++a) {
        for (int b = 0; b <= a; ++b) cells += (a + b == k);
      }
      EXPECT_EQ(g->cohomology->basis_in_degree(k).size(), cells) << "Gr2," << n << " degree " << k;
    }
  }
  EXPECT_EQ(total_rank(o2_space()), 4u);
  EXPECT_EQ(total_rank(product(cpn(2), sphere(3))), 6u);
}

TEST(Catalog, GrassmannianPresentationAgreesWithBruteForce) {
  for (int n = 3; n <= 6; ++n) {
    auto g = grassmannian2(n);
    oracle::FreeSpace space{g->cohomology->generators(), F2};
    // The ideal is generated by wbar_{n-1}, wbar_n.
    for (int d = 0; d <= 12; ++d) {
      EXPECT_EQ(g->cohomology->basis_in_degree(d).size(),
                oracle::quotient_dimension(space, {oracle::wbar(n - 1), oracle::wbar(n)}, d, 2 * d + 2));
    }
  }
}

TEST(Catalog, StiefelWhitneyClasses) {
  for (int n = 1; n <= 7; ++n) {
    auto m = rpn(n);
    auto a = Element::generator(m->cohomology, "a");
    EXPECT_EQ(m->sw_tangent->total, (Element::one(m->cohomology) + a).pow(n + 1));
  }
  auto g5 = grassmannian2(5);
  EXPECT_EQ(g5->sw_tangent->total.component(1), Element::generator(g5->cohomology, "w1"));
  EXPECT_TRUE(grassmannian2(6)->sw_tangent->total.component(1).is_zero());
  auto t = minus_tangent(g5);
  EXPECT_EQ(t.w(1), Element::generator(g5->cohomology, "w1"));
  EXPECT_THROW(t.w(2), DomainError);  // beyond what the catalog records
}

TEST(Catalog, PoincareDualityRoundTrip) {
  std::vector<ManifoldPtr> spaces{cpn(3), rpn(5), sphere(4), grassmannian2(5), o2_space(), product(cpn(1), sphere(1)),
                                  product(sphere(3), sphere(1)), product(rpn(2), o2_space())};
  for (const auto& m : spaces) {
    for (int k = 0; k <= m->dim; ++k) {
      for (const auto& b : m->cohomology->basis_in_degree(k)) {
        Element x = Element::monomial(m->cohomology, b);
        auto h = poincare_dual(m, x);
        EXPECT_EQ(h.degree, m->dim - k);
        EXPECT_EQ(poincare_dual_inverse(h), x) << m->name << " " << x.to_string();
        // <y, PD(x)> = <y x, [M]>
        for (const auto& c : m->cohomology->basis_in_degree(m->dim - k)) {
          Element y = Element::monomial(m->cohomology, c);
          EXPECT_EQ(kronecker(y, h), m->evaluate(x * y));
        }
      }
    }
  }
}

TEST(Catalog, ProductFundamentalClassSign) {
  auto p = product(sphere(1, Z, "a"), sphere(1, Z, "b"));
  auto a = Element::generator(p->cohomology, "a"), b = Element::generator(p->cohomology, "b");
  EXPECT_EQ(p->evaluate(a * b), Integer(-1));  // (-1)^{1*1}
  EXPECT_EQ(p->evaluate(b * a), Integer(1));
  auto q = product(sphere(2, Z, "a"), sphere(1, Z, "b"));
  EXPECT_EQ(q->evaluate(Element::parse(q->cohomology, "a*b")), Integer(1));
}

TEST(Catalog, Registry) {
  EXPECT_EQ(standard_space("cp3")->dim, 6);
  EXPECT_EQ(standard_space("gr2,5")->dim, 6);
  EXPECT_EQ(standard_space("cp1xs1")->dim, 3);
  EXPECT_EQ(standard_space("rp2xs1")->coefficients(), F2);
  EXPECT_EQ(standard_space("cp2", F2)->coefficients(), F2);
  EXPECT_THROW(standard_space("rp3", Z), DomainError);
  EXPECT_THROW(standard_space("gr2,4", Z), DomainError);
  EXPECT_THROW(standard_space("torus"), DomainError);
  EXPECT_THROW(standard_space("cp"), DomainError);
  EXPECT_THROW(standard_fiber("omegaS3", Z), DomainError);  // needs a truncation
  EXPECT_EQ(standard_fiber("omegaS3", Z, 4).homology->basis_in_degree(8).size(), 1u);
  EXPECT_THROW(standard_fiber("omegaS2", Z, 3), DomainError);
  EXPECT_NO_THROW(standard_fiber("omegaS2", F2, 3));
  EXPECT_THROW(standard_fiber("o2", Z), DomainError);
}

TEST(Catalog, RpnIsNotIntegrallyOrientedWhenEven) {
  EXPECT_FALSE(rpn(2)->orientable_z);
  EXPECT_TRUE(rpn(3)->orientable_z);
  EXPECT_TRUE(rpn(2)->duality_available());  // F2 presentation
}

TEST(Catalog, FiberKroneckerPairingsAreInvertible) {
  for (const auto& f : {circle(), o2(), point_fiber()}) {
    for (const auto& [k, m] : f.kronecker) {
      EXPECT_TRUE(inverse(m, f.homology->coefficients()).has_value()) << f.name << " degree " << k;
      EXPECT_EQ(m.size(), f.homology->basis_in_degree(k).size());
      EXPECT_EQ(m.size(), f.space->cohomology->basis_in_degree(k).size());
    }
  }
}

TEST(Catalog, AdjointFacts) {
  for (int n = 3; n <= 8; ++n) {
    auto f = adjoint_o2_facts(n);
    EXPECT_EQ(f.components, 2);
    EXPECT_EQ(f.component_dim, grassmannian2(n)->dim + 1);
    EXPECT_EQ(f.components_orientable, n % 2 == 1);
  }
  EXPECT_THROW(adjoint_o2_facts(2), DomainError);
}

}  // namespace
}  // namespace strops
