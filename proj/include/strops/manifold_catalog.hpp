#pragma once

// Closed manifolds and fiber monoids the toolkit computes with: cohomology
// presentations, fundamental classes, Stiefel-Whitney data, Steenrod tables,
// and Poincare duality.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strops/graded_algebra.hpp"
#include "strops/linalg.hpp"
#include "strops/sq_action.hpp"

namespace strops {

/// Total Stiefel-Whitney class, trusted only through degree known_through.
struct SwData {
  Element total;
  int known_through = 0;
};

struct ManifoldData {
  std::string name;
  int dim = 0;
  RingPtr cohomology;
  bool orientable_z = false;
  bool simply_connected = false;
  std::optional<SwData> sw_tangent;  // F2 presentations only
  std::optional<SqAction> sq;        // F2 presentations only
  Terms fundamental;                 // <m, [M]> for normal monomials m of degree dim
  std::vector<std::string> dual_names;

  const Coefficients& coefficients() const { return cohomology->coefficients(); }

  bool orientable(const Coefficients& c) const { return c.characteristic() == 2 || orientable_z; }

  bool duality_available() const { return orientable(coefficients()); }

  /// Kronecker pairing of a class with the fundamental class.
  Integer evaluate(const Element& x) const {
    Integer out = 0;
    for (const auto& [m, c] : x.terms()) {
      auto it = fundamental.find(m);
      if (it != fundamental.end()) out += c * it->second;
    }
    return coefficients().normalize(out);
  }

  /// P[i][j] = <b_i u b'_j, [M]> for the bases of H^k and H^{d-k}.
  Matrix fundamental_pairing(int k) const {
    auto left = cohomology->basis_in_degree(k);
    auto right = cohomology->basis_in_degree(dim - k);
    Matrix p(left.size(), Vector(right.size(), 0));
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        p[i][j] = evaluate(Element::monomial(cohomology, left[i]) * Element::monomial(cohomology, right[j]));
      }
    }
    return p;
  }
};

using ManifoldPtr = std::shared_ptr<const ManifoldData>;

namespace detail {

inline Terms single_top(const RingPtr& ring, int dim) {
  auto top = ring->basis_in_degree(dim);
  if (top.size() != 1) throw DomainError("expected a one-dimensional top degree");
  return Terms{{top.front(), Integer(1)}};
}

// Checks the shape invariants shared by every catalog entry.
inline ManifoldPtr finish(ManifoldData m) {
  const auto& coeffs = m.coefficients();
  if (m.dim < 0 || m.dim > m.cohomology->degree_bound()) {
    throw DomainError(m.name + ": dimension outside the verified degree range");
  }
  if (m.cohomology->basis_in_degree(m.dim).empty()) throw DomainError(m.name + ": top degree vanishes");
  for (int k = m.dim + 1; k <= std::min(m.cohomology->degree_bound(), 2 * m.dim + 2); ++k) {
    if (!m.cohomology->basis_in_degree(k).empty()) throw DomainError(m.name + ": classes above the dimension");
  }
  if (m.sw_tangent) {
    if (coeffs.characteristic() != 2) throw DomainError(m.name + ": Stiefel-Whitney classes need F2");
    if (!(m.sw_tangent->total.component(0) == Element::one(m.cohomology))) {
      throw DomainError(m.name + ": total Stiefel-Whitney class must start with 1");
    }
  }
  if (m.dual_names.size() != m.cohomology->size()) throw DomainError(m.name + ": one dual name per generator");
  if (m.duality_available()) {
    for (int k = 0; k <= m.dim; ++k) {
      Matrix p = m.fundamental_pairing(k);
      if (p.size() != (p.empty() ? 0 : p.front().size()) || (!p.empty() && !inverse(p, coeffs))) {
        throw DomainError(m.name + ": cup pairing degenerate in degree " + std::to_string(k));
      }
    }
  }
  return std::make_shared<const ManifoldData>(std::move(m));
}

inline Element binomial_power(const RingPtr& ring, const std::string& gen, int exponent) {
  return (Element::one(ring) + Element::generator(ring, gen)).pow(exponent);
}

}  // namespace detail

inline ManifoldPtr cpn(int n, Coefficients coeffs = Coefficients::integers()) {
  if (n < 1) throw DomainError("cpn: n must be at least 1");
  auto ring = make_ring({{"x", 2}}, std::vector<std::string>{"x^" + std::to_string(n + 1)}, coeffs,
                        std::max(default_degree_bound(), 2 * n));
  ManifoldData m;
  m.name = "cp" + std::to_string(n);
  m.dim = 2 * n;
  m.cohomology = ring;
  m.orientable_z = true;
  m.simply_connected = true;
  m.fundamental = detail::single_top(ring, m.dim);
  m.dual_names = {"c"};
  if (coeffs.characteristic() == 2) {
    m.sw_tangent = SwData{detail::binomial_power(ring, "x", n + 1), m.dim};
    m.sq = sq_action_from_totals(ring, {"x+x^2"});
  }
  return detail::finish(std::move(m));
}

inline ManifoldPtr rpn(int n, Coefficients coeffs = Coefficients::prime_field(2)) {
  if (n < 1) throw DomainError("rpn: n must be at least 1");
  if (coeffs.characteristic() != 2) throw DomainError("rpn: only F2 coefficients are supported (integral torsion)");
  auto ring = make_ring({{"a", 1}}, std::vector<std::string>{"a^" + std::to_string(n + 1)}, coeffs,
                        std::max(default_degree_bound(), n));
  ManifoldData m;
  m.name = "rp" + std::to_string(n);
  m.dim = n;
  m.cohomology = ring;
  m.orientable_z = n % 2 == 1;
  m.simply_connected = false;
  m.fundamental = detail::single_top(ring, n);
  m.dual_names = {"alpha"};
  m.sw_tangent = SwData{detail::binomial_power(ring, "a", n + 1), n};
  m.sq = sq_action_from_totals(ring, {"a+a^2"});
  return detail::finish(std::move(m));
}

inline ManifoldPtr sphere(int n, Coefficients coeffs = Coefficients::integers(), const std::string& gen = "x",
                          const std::string& dual = "sigma") {
  if (n < 1) throw DomainError("sphere: n must be at least 1");
  auto ring = make_ring({{gen, n}}, std::vector<std::string>{gen + "^2"}, coeffs, std::max(default_degree_bound(), n));
  ManifoldData m;
  m.name = "s" + std::to_string(n);
  m.dim = n;
  m.cohomology = ring;
  m.orientable_z = true;
  m.simply_connected = n >= 2;
  m.fundamental = detail::single_top(ring, n);
  m.dual_names = {dual};
  if (coeffs.characteristic() == 2) {
    m.sw_tangent = SwData{Element::one(ring), n};
    m.sq = sq_action_from_totals(ring, {gen});
  }
  return detail::finish(std::move(m));
}

/// Relations w2^b * wbar_{n-1-b} (b = 0..n-1) for H^*(Gr_{2,n}; F2), where
/// wbar_k is the degree-k part of (1 + w1 + w2)^{-1}. They generate the ideal
/// (wbar_{n-1}, wbar_n) and form a Groebner basis for the lex order w1 > w2.
inline std::vector<Terms> grassmannian_relations(int n) {
  FreeAlgebra alg({{"w1", 1}, {"w2", 2}}, Coefficients::prime_field(2));
  std::vector<Terms> wbar{Terms{{Monomial{0, 0}, 1}}, Terms{{Monomial{1, 0}, 1}}};
  for (int k = 2; k < n; ++k) {
    Terms next = alg.multiply(Terms{{Monomial{1, 0}, 1}}, wbar[static_cast<std::size_t>(k - 1)]);
    for (const auto& [m, c] : alg.multiply(Terms{{Monomial{0, 1}, 1}}, wbar[static_cast<std::size_t>(k - 2)])) {
      alg.add_term(next, m, c);
    }
    wbar.push_back(next);
  }
  std::vector<Terms> rels;
  for (int b = 0; b < n; ++b) {
    rels.push_back(alg.multiply(Terms{{Monomial{0, b}, 1}}, wbar[static_cast<std::size_t>(n - 1 - b)]));
  }
  return rels;
}

inline ManifoldPtr grassmannian2(int n) {
  if (n < 3) throw DomainError("grassmannian2: n must be at least 3");
  auto ring = make_ring({{"w1", 1}, {"w2", 2}}, grassmannian_relations(n), Coefficients::prime_field(2),
                        std::max(default_degree_bound(), 2 * n));
  ManifoldData m;
  m.name = "gr2," + std::to_string(n);
  m.dim = 2 * (n - 2);
  m.cohomology = ring;
  m.orientable_z = n % 2 == 0;
  m.simply_connected = false;
  m.fundamental = detail::single_top(ring, m.dim);
  m.dual_names = {"Dw1", "Dw2"};
  // w1(TGr_{2,n}) = n w1. Nothing above degree 1 is recorded.
  Element total = Element::one(ring);
  if (n % 2 == 1) total += Element::generator(ring, "w1");
  m.sw_tangent = SwData{total, 1};
  m.sq = grassmannian_sq_action(ring);
  return detail::finish(std::move(m));
}

/// O(2) as a closed 1-manifold: two circles. e is the indicator class of the
/// reflection component, b restricts to the generator on each circle.
inline ManifoldPtr o2_space() {
  auto ring = make_ring({{"e", 0}, {"b", 1}}, std::vector<std::string>{"e^2+e", "b^2"}, Coefficients::prime_field(2));
  ManifoldData m;
  m.name = "o2";
  m.dim = 1;
  m.cohomology = ring;
  m.orientable_z = true;
  m.simply_connected = false;
  // [O(2)] is the sum of the two component classes: <e*b, .> = 1, <b, .> = 1 + 1.
  m.fundamental = Terms{{Monomial{1, 1}, 1}};
  m.dual_names = {"De", "Db"};
  m.sw_tangent = SwData{Element::one(ring), 1};
  m.sq = sq_action_from_totals(ring, {"e", "b"});
  return detail::finish(std::move(m));
}

inline ManifoldPtr point_space(Coefficients coeffs = Coefficients::integers()) {
  auto ring = make_ring({}, std::vector<std::string>{}, coeffs);
  ManifoldData m;
  m.name = "point";
  m.dim = 0;
  m.cohomology = ring;
  m.orientable_z = true;
  m.simply_connected = true;
  m.fundamental = Terms{{ring->algebra().unit(), 1}};
  if (coeffs.characteristic() == 2) {
    m.sw_tangent = SwData{Element::one(ring), 0};
    m.sq = SqAction(ring, {});
  }
  return detail::finish(std::move(m));
}

inline ManifoldPtr product(const ManifoldPtr& a, const ManifoldPtr& b) {
  if (!(a->coefficients() == b->coefficients())) throw DomainError("product: coefficient mismatch");
  auto ring = tensor(a->cohomology, b->cohomology);
  ManifoldData m;
  m.name = a->name + "x" + b->name;
  m.dim = a->dim + b->dim;
  m.cohomology = ring;
  m.orientable_z = a->orientable_z && b->orientable_z;
  m.simply_connected = a->simply_connected && b->simply_connected;
  // [A x B] = [A] x [B]; <u x v, [A] x [B]> = (-1)^{|v| dim A} <u,[A]><v,[B]>.
  for (const auto& [ma, ca] : a->fundamental) {
    for (const auto& [mb, cb] : b->fundamental) {
      Monomial e(ma);
      e.insert(e.end(), mb.begin(), mb.end());
      int sign = (a->dim * b->dim) % 2 != 0 ? -1 : 1;
      ring->algebra().add_term(m.fundamental, e, ca * cb * sign);
    }
  }
  m.dual_names = a->dual_names;
  for (auto name : b->dual_names) {
    while (std::find(m.dual_names.begin(), m.dual_names.end(), name) != m.dual_names.end()) name += "_2";
    m.dual_names.push_back(name);
  }
  if (a->sw_tangent && b->sw_tangent) {
    m.sw_tangent = SwData{embed_left(a->sw_tangent->total, ring) * embed_right(b->sw_tangent->total, ring),
                          std::min(a->sw_tangent->known_through, b->sw_tangent->known_through)};
  }
  if (a->sq && b->sq) m.sq = tensor_action(*a->sq, *b->sq, ring);
  return detail::finish(std::move(m));
}

/// Virtual bundle over a manifold (here -TM) recorded by its total SW class,
/// possibly pulled back to a product ring with the manifold as left factor.
struct VirtualBundleTwist {
  ManifoldPtr base;
  RingPtr ring;
  Element sw_total;
  int known_through = 0;

  /// w_i of the twist; errors when that degree was never derived.
  Element w(int i) const {
    if (i < 0) return Element(ring);
    if (i == 0) return Element::one(ring);
    if (i > base->dim) return Element(ring);
    if (i > known_through) {
      throw DomainError("w_" + std::to_string(i) + " of the twist over " + base->name + " is not available");
    }
    return sw_total.component(i);
  }
};

inline VirtualBundleTwist minus_tangent(const ManifoldPtr& m) {
  if (!m->sw_tangent) throw DomainError(m->name + ": no Stiefel-Whitney data");
  const auto& ring = m->cohomology;
  Element rest = m->sw_tangent->total - Element::one(ring);
  Element inv = Element::one(ring);
  Element power = Element::one(ring);
  for (int k = 1; k <= m->dim; ++k) {
    power = power * rest;
    inv += (k % 2 == 1) ? -power : power;
  }
  int known = m->sw_tangent->known_through;
  Element truncated(ring);
  for (int d = 0; d <= known; ++d) truncated += inv.component(d);
  return VirtualBundleTwist{m, ring, truncated, known};
}

/// The twist pulled back along the projection onto the left factor.
inline VirtualBundleTwist pullback_left(const VirtualBundleTwist& t, const RingPtr& product_ring) {
  return VirtualBundleTwist{t.base, product_ring, embed_left(t.sw_total, product_ring), t.known_through};
}

/// Homology class in H_degree, written in the basis Kronecker-dual to
/// basis_in_degree(cohomology, degree).
struct HomologyClass {
  ManifoldPtr space;
  int degree = 0;
  Vector coords;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Integer& v) { return v == 0; });
  }
  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.space == b.space && a.degree == b.degree && a.coords == b.coords;
  }
};

/// <x, h> for a homogeneous cohomology class x of the same degree as h.
inline Integer kronecker(const Element& x, const HomologyClass& h) {
  auto basis = h.space->cohomology->basis_in_degree(h.degree);
  if (!x.is_zero() && x.degree() != h.degree) throw DomainError("kronecker: degree mismatch");
  Vector xc = coordinates(x, basis);
  Integer out = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) out += xc[i] * h.coords[i];
  return h.space->coefficients().normalize(out);
}

/// PD(x) = x n [M], characterised by <b, PD(x)> = <x u b, [M]>.
inline HomologyClass poincare_dual(const ManifoldPtr& m, const Element& x, int degree) {
  if (!m->duality_available()) {
    throw DomainError(m->name + " is not orientable over " + m->coefficients().name() + "; no Poincare duality");
  }
  if (!x.is_homogeneous()) throw DomainError("poincare_dual: inhomogeneous class " + x.to_string());
  if (!x.is_zero() && x.degree() != degree) throw DomainError("poincare_dual: class is not in degree " + std::to_string(degree));
  auto basis = m->cohomology->basis_in_degree(m->dim - degree);
  HomologyClass h{m, m->dim - degree, Vector(basis.size(), 0)};
  for (std::size_t j = 0; j < basis.size(); ++j) h.coords[j] = m->evaluate(x * Element::monomial(m->cohomology, basis[j]));
  return h;
}

inline HomologyClass poincare_dual(const ManifoldPtr& m, const Element& x) {
  auto d = x.degree();
  if (!d) throw DomainError("poincare_dual: zero or inhomogeneous class needs an explicit degree");
  return poincare_dual(m, x, *d);
}

inline Element poincare_dual_inverse(const HomologyClass& h) {
  const auto& m = h.space;
  if (!m->duality_available()) {
    throw DomainError(m->name + " is not orientable over " + m->coefficients().name() + "; no Poincare duality");
  }
  int q = m->dim - h.degree;
  auto basis = m->cohomology->basis_in_degree(q);
  // coords_j = sum_i x_i P_q[i][j]
  auto x = solve(transpose(m->fundamental_pairing(q)), h.coords, m->coefficients());
  if (!x) throw DomainError("poincare_dual_inverse: pairing not invertible");
  return from_coordinates(m->cohomology, basis, *x);
}

/// The fundamental class [M] as a homology class.
inline HomologyClass fundamental_class(const ManifoldPtr& m) { return poincare_dual(m, Element::one(m->cohomology), 0); }

// ---------------------------------------------------------------- fibers

/// Homology of a topological monoid with its Pontrjagin product, plus (when
/// the monoid is a closed manifold) its cohomology and the Kronecker pairing.
struct PontrjaginRing {
  std::string name;
  RingPtr homology;
  ManifoldPtr space;                 // may be null
  std::map<int, Matrix> kronecker;   // [k][i][j] = <coh basis_i, hom basis_j>

  /// Augmentation: components to 1, positive degrees to 0.
  Integer augmentation(const Monomial& m) const { return homology->degree(m) == 0 ? 1 : 0; }
};

inline PontrjaginRing circle(Coefficients coeffs = Coefficients::integers()) {
  PontrjaginRing f;
  f.name = "s1";
  f.homology = make_ring({{"t", 1}}, std::vector<std::string>{"t^2"}, coeffs);
  f.space = sphere(1, coeffs, "b", "t");
  f.kronecker = {{0, Matrix{{1}}}, {1, Matrix{{1}}}};
  return f;
}

/// H_*(O(2); F2): s the class of a point in the reflection component, t the
/// fundamental class of SO(2). Bases: degree 0 {s, 1}, degree 1 {s*t, t}.
inline PontrjaginRing o2() {
  PontrjaginRing f;
  f.name = "o2";
  f.homology = make_ring({{"s", 0}, {"t", 1}}, std::vector<std::string>{"s^2+1", "t^2"}, Coefficients::prime_field(2));
  f.space = o2_space();
  // cohomology bases: degree 0 {e, 1}, degree 1 {e*b, b}
  f.kronecker = {{0, Matrix{{1, 0}, {1, 1}}}, {1, Matrix{{1, 0}, {1, 1}}}};
  return f;
}

inline PontrjaginRing point_fiber(Coefficients coeffs = Coefficients::integers()) {
  PontrjaginRing f;
  f.name = "point";
  f.homology = make_ring({}, std::vector<std::string>{}, coeffs);
  f.space = point_space(coeffs);
  f.kronecker = {{0, Matrix{{1}}}};
  return f;
}

/// H_*(Omega S^n) = Z[u], |u| = n - 1, cut off above u^truncation.
inline PontrjaginRing omega_sphere(int n, std::optional<int> truncation, Coefficients coeffs = Coefficients::integers()) {
  if (n < 2) throw DomainError("omega_sphere: n must be at least 2");
  if (!truncation) throw DomainError("omega_sphere: a truncation is required (the ring is infinite)");
  if (*truncation < 1) throw DomainError("omega_sphere: truncation must be positive");
  if ((n - 1) % 2 != 0 && coeffs.characteristic() != 2) {
    throw DomainError("omega_sphere: for even n the Pontrjagin ring is not graded-commutative over " + coeffs.name());
  }
  PontrjaginRing f;
  f.name = "omegaS" + std::to_string(n);
  int bound = std::max(default_degree_bound(), (n - 1) * (*truncation + 1));
  f.homology = make_ring({{"u", n - 1}}, std::vector<std::string>{"u^" + std::to_string(*truncation + 1)}, coeffs, bound);
  return f;
}

// ---------------------------------------------------------------- registry

namespace detail {

inline ManifoldPtr single_space(const std::string& id, std::optional<Coefficients> coeffs) {
  auto number = [&](std::size_t from) {
    std::string digits = id.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4) {
      throw DomainError("unknown space '" + id + "'");
    }
    return std::stoi(digits);
  };
  if (id.rfind("gr2,", 0) == 0) {
    if (coeffs && coeffs->characteristic() != 2) throw DomainError("gr2,n is only available over F2");
    return grassmannian2(number(4));
  }
  if (id == "o2") {
    if (coeffs && coeffs->characteristic() != 2) throw DomainError("o2 is only available over F2");
    return o2_space();
  }
  if (id == "point") return point_space(coeffs.value_or(Coefficients::integers()));
  if (id.rfind("cp", 0) == 0) return cpn(number(2), coeffs.value_or(Coefficients::integers()));
  if (id.rfind("rp", 0) == 0) return rpn(number(2), coeffs.value_or(Coefficients::prime_field(2)));
  if (id.rfind("s", 0) == 0) return sphere(number(1), coeffs.value_or(Coefficients::integers()));
  throw DomainError("unknown space '" + id + "'");
}

}  // namespace detail

/// Space identifiers: cpN, rpN, sN, gr2,N, o2, point, and products joined by
/// 'x' (cp1xs1). Without an explicit ring, cp/s/point use Z and rp/gr/o2 use
/// F2; products of mixed defaults fall back to F2.
inline ManifoldPtr standard_space(const std::string& id, std::optional<Coefficients> coeffs = std::nullopt) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t x = id.find('x', start);
    parts.push_back(id.substr(start, x == std::string::npos ? std::string::npos : x - start));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (parts.size() > 1 && !coeffs) {
    bool needs_f2 = std::any_of(parts.begin(), parts.end(), [](const std::string& p) {
      return p.rfind("rp", 0) == 0 || p.rfind("gr", 0) == 0 || p == "o2";
    });
    if (needs_f2) coeffs = Coefficients::prime_field(2);
  }
  ManifoldPtr out;
  for (const auto& p : parts) {
    auto m = detail::single_space(p, coeffs);
    out = out ? product(out, m) : m;
  }
  return out;
}

/// Fiber identifiers: s1, o2, point, omegaS<n> (needs a truncation).
inline PontrjaginRing standard_fiber(const std::string& id, Coefficients coeffs, std::optional<int> truncation = std::nullopt) {
  if (id == "s1") return circle(coeffs);
  if (id == "o2") {
    if (coeffs.characteristic() != 2) throw DomainError("o2 fiber is only available over F2");
    return o2();
  }
  if (id == "point") return point_fiber(coeffs);
  if (id.rfind("omegaS", 0) == 0) {
    std::string digits = id.substr(6);
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw DomainError("unknown fiber '" + id + "'");
    }
    return omega_sphere(std::stoi(digits), truncation, coeffs);
  }
  throw DomainError("unknown fiber '" + id + "'");
}

/// Facts about the two components C1, C2 of the adjoint bundle
/// Ad(E_n) = V_{2,n} x_{O(2)} O(2) over Gr_{2,n}: each is a closed manifold of
/// dimension dim Gr_{2,n} + 1, orientable exactly when n is odd.
struct AdjointO2Facts {
  int n = 0;
  int components = 2;
  int component_dim = 0;
  bool components_orientable = false;
};

inline AdjointO2Facts adjoint_o2_facts(int n) {
  if (n < 3) throw DomainError("adjoint O(2) facts start at n = 3");
  return AdjointO2Facts{n, 2, 2 * (n - 2) + 1, n % 2 == 1};
}

}  // namespace strops
