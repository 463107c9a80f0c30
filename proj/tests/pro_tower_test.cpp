#include <gtest/gtest.h>

#include "strops/pro_tower.hpp"

namespace strops {
namespace {

TEST(Umkehr, CpInclusionLowersDegreeByTwo) {
  auto f = cp_inclusion(2);
  // PD(x^k) in CP^3 restricts to PD(x^k) in CP^2 (shifted degree preserved)
  for (int k = 0; k <= 3; ++k) {
    auto h = poincare_dual(f.target, Element::generator(f.target->cohomology, "x").pow(k));
    auto g = umkehr(f, h);
    EXPECT_EQ(g.degree, h.degree - 2);
    Element expect = k <= 2 ? Element::generator(f.source->cohomology, "x").pow(k) : Element(f.source->cohomology);
    EXPECT_EQ(poincare_dual_inverse(g), expect);
  }
}

TEST(Umkehr, IdentityIsIdentity) {
  auto m = grassmannian2(5);
  auto id = identity_map(m);
  for (int k = 0; k <= m->dim; ++k) {
    for (const auto& b : m->cohomology->basis_in_degree(k)) {
      auto h = poincare_dual(m, Element::monomial(m->cohomology, b));
      auto g = umkehr(id, h);
      EXPECT_EQ(g.coords, h.coords);
    }
  }
}

TEST(Tower, CircleLevelsAndMaps) {
  auto tower = s1_tower(5);
  ASSERT_EQ(tower.levels.size(), 5u);
  ASSERT_EQ(tower.maps.size(), 4u);
  for (const auto& m : tower.maps) {
    EXPECT_TRUE(m.homomorphism_checked);
    ASSERT_TRUE(m.iso_from_degree.has_value());
    EXPECT_EQ(*m.iso_from_degree, -2 * m.to);
    EXPECT_FALSE(m.iso.at(-2 * m.to - 1));  // c^{n+1} t dies
  }
}

TEST(Tower, LimitWindowChecks) {
  auto tower = s1_tower(4);
  auto lim = tower_limit(tower, {-6, 1});
  EXPECT_EQ(lim.basis(-6).size(), 1u);
  auto c = Element::generator(lim.ring, "c");
  EXPECT_TRUE(lim.multiply(c.pow(2), c.pow(2)).is_zero());  // degree -8 truncated
  EXPECT_EQ(lim.multiply(c, c.pow(2)), c.pow(3));
  EXPECT_THROW(tower_limit(tower, {-8, 1}), DomainError);
  EXPECT_THROW(s1_tower(0), DomainError);
}

TEST(Tower, ConstantTowerIsIsoEverywhere) {
  auto s = string_ring(trivial_model(cpn(1), circle()));
  auto tower = constant_tower(s.ring, s.window, 3);
  for (const auto& m : tower.maps) EXPECT_EQ(m.iso_from_degree, s.window.lo);
}

TEST(O2, TrivialSideVanishes) {
  for (int n = 3; n <= 6; ++n) {
    auto level = trivial_o2_level(n);
    EXPECT_EQ(level.verdict, Sq1Verdict::Zero) << n;
    EXPECT_EQ(level.h1_basis.size(), 2u);
    for (const auto& h : level.h1_classes) EXPECT_EQ(h.degree, grassmannian2(n)->dim + 1);
  }
}

TEST(O2, AdjointVerdicts) {
  EXPECT_EQ(adjoint_o2_level(3).verdict, Sq1Verdict::Undetermined);
  EXPECT_EQ(adjoint_o2_level(4).verdict, Sq1Verdict::Injective);
  EXPECT_EQ(adjoint_o2_level(5).verdict, Sq1Verdict::Undetermined);  // before transport
  EXPECT_EQ(adjoint_o2_level(6).verdict, Sq1Verdict::Injective);
}

TEST(O2, ComparisonCertificate) {
  auto cmp = o2_comparison(6);
  EXPECT_TRUE(cmp.inequivalent);
  EXPECT_EQ(cmp.witness_levels, (std::vector<int>{4, 6}));
  EXPECT_EQ(cmp.adjoint[2].verdict, Sq1Verdict::Injective);  // n = 5, transported
  for (bool b : cmp.trivial_maps_iso) EXPECT_TRUE(b);
  for (bool b : cmp.adjoint_maps_iso) EXPECT_TRUE(b);
  EXPECT_THROW(o2_comparison(3), DomainError);
}

}  // namespace
}  // namespace strops
