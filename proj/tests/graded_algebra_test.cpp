#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "strops/graded_algebra.hpp"
#include "strops/ring_json.hpp"

namespace strops {
namespace {

const Coefficients Z = Coefficients::integers();
const Coefficients F2 = Coefficients::prime_field(2);

RingPtr exterior_t() { return make_ring({{"t", 1}}, std::vector<std::string>{"t^2"}, Z); }
RingPtr truncated_c(int top) {
  return make_ring({{"c", -2}}, std::vector<std::string>{"c^" + std::to_string(top + 1)}, Z);
}

// Groebner set w2^b * wbar_{n-1-b}, b = 0..n-1, for H^*(Gr_{2,n}; F2).
std::vector<Terms> grassmannian_relations(int n) {
  std::vector<Terms> rels;
  for (int b = 0; b < n; ++b) {
    Terms shifted;
    for (const auto& [m, c] : oracle::wbar(n - 1 - b)) shifted.emplace(Monomial{m[0], m[1] + b}, c);
    rels.push_back(shifted);
  }
  return rels;
}

RingPtr gr24() { return make_ring({{"w1", 1}, {"w2", 2}}, grassmannian_relations(4), F2); }

TEST(MakeRing, ExteriorAlgebraFromKoszulRule) {
  auto ring = exterior_t();
  EXPECT_TRUE(ring->relations().empty());  // t^2 is already zero in the free algebra
  EXPECT_EQ(ring->basis_in_degree(0).size(), 1u);
  EXPECT_EQ(ring->basis_in_degree(1).size(), 1u);
  EXPECT_TRUE(ring->basis_in_degree(2).empty());
}

TEST(MakeRing, NegativeDegreeTruncatedPolynomial) {
  auto ring = truncated_c(2);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(ring->basis_in_degree(-2 * k).size(), 1u);
  EXPECT_TRUE(ring->basis_in_degree(-6).empty());
  auto c = Element::generator(ring, "c");
  EXPECT_TRUE(c.pow(3).is_zero());
}

TEST(MakeRing, GrassmannianDimensions) {
  auto ring = gr24();
  std::vector<std::size_t> dims;
  for (int d = 0; d <= 5; ++d) dims.push_back(ring->basis_in_degree(d).size());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2, 1, 1, 0}));
  // The two defining relations lie in the ideal and give the same quotient.
  oracle::FreeSpace space{ring->generators(), F2};
  for (int d = 0; d <= 8; ++d) {
    EXPECT_EQ(ring->basis_in_degree(d).size(),
              oracle::quotient_dimension(space, {oracle::wbar(3), oracle::wbar(4)}, d, d))
        << "degree " << d;
  }
}

TEST(MakeRing, TwoRelationGrassmannianPresentationIsNotConfluent) {
  try {
    make_ring({{"w1", 1}, {"w2", 2}}, std::vector<std::string>{"w1^3", "w1^4+w1^2*w2+w2^2"}, F2);
    FAIL() << "expected a confluence failure";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("confluence failure"), std::string::npos) << e.what();
  }
}

TEST(MakeRing, RejectsNonHomogeneousRelation) {
  EXPECT_THROW(make_ring({{"x", 2}}, std::vector<std::string>{"x^2+x"}, Z), DomainError);
}

TEST(MakeRing, RejectsNonUnitLeadingCoefficient) {
  EXPECT_THROW(make_ring({{"x", 2}}, std::vector<std::string>{"2*x^2"}, Z), DomainError);
}

TEST(MakeRing, RejectsDuplicateGenerators) {
  EXPECT_THROW(make_ring({{"x", 2}, {"x", 4}}, std::vector<std::string>{}, Z), DomainError);
}

TEST(Arith, UnitLaw) {
  auto ring = gr24();
  auto x = Element::parse(ring, "w1^2+w2");
  EXPECT_EQ(Element::one(ring) * x, x);
  EXPECT_EQ(arith(Element::one(ring), x, ArithOp::Mul), x);
}

TEST(Arith, KoszulSignEvenTimesOdd) {
  auto ring = tensor(exterior_t(), truncated_c(2));
  auto t = Element::generator(ring, "t");
  auto c = Element::generator(ring, "c");
  EXPECT_EQ(t * c, c * t);
  EXPECT_EQ((t * c).to_string(), "t*c");
}

TEST(Arith, KoszulSignOddTimesOdd) {
  auto ring = make_ring({{"a", 1}, {"b", 3}}, std::vector<std::string>{}, Z);
  auto a = Element::generator(ring, "a");
  auto b = Element::generator(ring, "b");
  EXPECT_EQ(b * a, -(a * b));
  EXPECT_EQ(Element::parse(ring, "b*a"), -(a * b));
}

TEST(Arith, GrassmannianSquareOfW2) {
  auto ring = gr24();
  auto w2 = Element::generator(ring, "w2");
  EXPECT_EQ(w2 * w2, Element::parse(ring, "w1^2*w2"));
  // Row-reduction cross-check: in degree 4 the quotient is one-dimensional and
  // both classes are nonzero, so they agree iff their difference lies in the ideal.
  oracle::FreeSpace space{ring->generators(), F2};
  auto rels = grassmannian_relations(4);
  rels.push_back(Terms{{Monomial{0, 2}, 1}, {Monomial{2, 1}, 1}});
  EXPECT_EQ(oracle::quotient_dimension(space, rels, 4, 4), 1u);
}

TEST(Arith, ScaleAndAdd) {
  auto ring = truncated_c(2);
  auto c = Element::generator(ring, "c");
  EXPECT_EQ(arith(c, Element::scalar(ring, 3), ArithOp::Scale), c.scaled(3));
  EXPECT_EQ(arith(c, c, ArithOp::Add), c.scaled(2));
  EXPECT_THROW(arith(c, c, ArithOp::Scale), DomainError);
}

TEST(Arith, MixedRingsRejected) {
  auto a = Element::generator(truncated_c(2), "c");
  auto b = Element::generator(truncated_c(3), "c");
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
}

TEST(Basis, ProductRingDegreeMinusThree) {
  auto ring = tensor(exterior_t(), truncated_c(2));
  auto basis = ring->basis_in_degree(-3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(Element::monomial(ring, basis[0]).to_string(), "t*c^2");
}

TEST(Basis, EmptyDegree) {
  EXPECT_TRUE(truncated_c(2)->basis_in_degree(3).empty());
  EXPECT_TRUE(gr24()->basis_in_degree(7).empty());
}

TEST(Basis, ExceedsVerifiedBound) {
  EXPECT_THROW(truncated_c(2)->basis_in_degree(-40), DomainError);
}

TEST(Basis, SortedAndDeterministic) {
  auto ring = gr24();
  auto b = ring->basis_in_degree(2);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(Element::monomial(ring, b[0]).to_string(), "w1^2");
  EXPECT_EQ(Element::monomial(ring, b[1]).to_string(), "w2");
  EXPECT_EQ(b, ring->basis_in_degree(2));
}

TEST(Tensor, UnitOfTensor) {
  auto ground = make_ring({}, std::vector<std::string>{}, Z);
  auto r = truncated_c(3);
  auto t = tensor(r, ground);
  EXPECT_EQ(*t, *r);
}

TEST(Tensor, CharacteristicTwoHasNoSigns) {
  auto lt = make_ring({{"t", 1}}, std::vector<std::string>{"t^2"}, F2);
  auto ls = make_ring({{"s", 1}}, std::vector<std::string>{"s^2"}, F2);
  auto ring = tensor(lt, ls);
  auto t = Element::generator(ring, "t");
  auto s = Element::generator(ring, "s");
  EXPECT_EQ(t * s, s * t);
  EXPECT_FALSE((t * s).is_zero());
}

TEST(Tensor, CoefficientMismatch) {
  auto lt = make_ring({{"t", 1}}, std::vector<std::string>{"t^2"}, F2);
  EXPECT_THROW(tensor(lt, truncated_c(2)), DomainError);
}

TEST(Tensor, NameCollisionsAreRenamed) {
  auto ring = tensor(exterior_t(), exterior_t());
  EXPECT_EQ(ring->generators()[1].name, "t_2");
  auto a = Element::generator(ring, "t");
  auto b = Element::generator(ring, "t_2");
  EXPECT_EQ(a * b, -(b * a));
}

TEST(Equal, Examples) {
  auto gr = gr24();
  EXPECT_TRUE(equal(Element::parse(gr, "w2^2"), Element::parse(gr, "w1^2*w2")));
  auto ring = truncated_c(2);
  auto c = Element::generator(ring, "c");
  EXPECT_TRUE(equal(c, c + Element(ring)));
  EXPECT_FALSE(equal(c, c * c));
}

TEST(Parse, FormatRoundTrip) {
  auto ring = tensor(exterior_t(), truncated_c(4));
  for (const char* text : {"0", "1", "-t*c^2", "3*c+-2*c", "c^2-5*t*c^3+7", "c*t-t*c"}) {
    auto x = Element::parse(ring, text);
    EXPECT_EQ(Element::parse(ring, x.to_string()), x) << text;
  }
  EXPECT_THROW(Element::parse(ring, "q"), DomainError);
  EXPECT_THROW(Element::parse(ring, "c^"), DomainError);
}

TEST(RingMap, RejectsMapsThatIgnoreRelations) {
  auto big = truncated_c(3);
  auto small = truncated_c(2);
  EXPECT_NO_THROW(RingMap::from_strings(big, small, {"c"}));
  EXPECT_THROW(RingMap::from_strings(small, big, {"c"}), DomainError);
}

// ---------------------------------------------------------------- properties

Element random_homogeneous(const RingPtr& ring, int degree, std::mt19937_64& rng) {
  auto basis = ring->basis_in_degree(degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element x(ring);
  for (const auto& m : basis) x += Element::monomial(ring, m, coeff(rng));
  return x;
}

TEST(Properties, AssociativityCommutativityNormalForm) {
  std::vector<std::pair<RingPtr, std::vector<int>>> rings = {
      {tensor(exterior_t(), truncated_c(3)), {1, 0, -1, -2, -3, -4, -5, -6}},
      {gr24(), {0, 1, 2, 3, 4}},
      {make_ring({{"a", 1}, {"b", 3}, {"x", 2}}, std::vector<std::string>{"x^3"}, Z), {0, 1, 2, 3, 4, 5, 6}},
  };
  std::mt19937_64 rng(20261019);
  for (const auto& [ring, degrees] : rings) {
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      int da = degrees[pick(rng)], db = degrees[pick(rng)], dc = degrees[pick(rng)];
      auto a = random_homogeneous(ring, da, rng);
      auto b = random_homogeneous(ring, db, rng);
      auto c = random_homogeneous(ring, dc, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      int sign = ((da * db) % 2 != 0) ? -1 : 1;
      EXPECT_EQ(a * b, (b * a).scaled(sign));
      Element renormalized(ring, (a * b).terms());
      EXPECT_EQ(renormalized, a * b);
    }
  }
}

TEST(Properties, JsonRoundTrip) {
  for (const auto& ring : {gr24(), tensor(exterior_t(), truncated_c(5)), exterior_t()}) {
    auto back = ring_from_json(ring_to_json(*ring));
    EXPECT_EQ(*back, *ring);
  }
}

}  // namespace
}  // namespace strops
