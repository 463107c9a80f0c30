#pragma once

// Finite inverse systems of graded rings: the BS^1 tower of HH_*(CP^n x S^1),
// degreewise limits, umkehr maps, and the two BO(2) towers over Gr_{2,n}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strops/manifold_catalog.hpp"
#include "strops/steenrod.hpp"
#include "strops/string_product.hpp"

namespace strops {

// ---------------------------------------------------------------- umkehr

/// f : M1 -> M2 with its cohomology pullback f^* : H^*(M2) -> H^*(M1).
struct CatalogMap {
  ManifoldPtr source;
  ManifoldPtr target;
  RingMap pullback;
};

inline CatalogMap identity_map(const ManifoldPtr& m) {
  std::vector<Element> images;
  for (const auto& g : m->cohomology->generators()) images.push_back(Element::generator(m->cohomology, g.name));
  return CatalogMap{m, m, RingMap(m->cohomology, m->cohomology, images)};
}

/// CP^n -> CP^{n+1}, x -> x.
inline CatalogMap cp_inclusion(int n, Coefficients coeffs = Coefficients::integers()) {
  auto small = cpn(n, coeffs), big = cpn(n + 1, coeffs);
  return CatalogMap{small, big, RingMap::from_strings(big->cohomology, small->cohomology, {"x"})};
}

/// Gr_{2,n} -> Gr_{2,n+1}, w_i -> w_i.
inline CatalogMap gr_inclusion(int n) {
  auto small = grassmannian2(n), big = grassmannian2(n + 1);
  return CatalogMap{small, big, RingMap::from_strings(big->cohomology, small->cohomology, {"w1", "w2"})};
}

/// f x id_F, given the product manifolds on both sides.
inline CatalogMap times_identity(const CatalogMap& f, const ManifoldPtr& fiber, const ManifoldPtr& source_product,
                                 const ManifoldPtr& target_product) {
  const auto& tgt = target_product->cohomology;
  const auto& src = source_product->cohomology;
  std::vector<Element> images;
  for (const auto& img : f.pullback.images()) images.push_back(embed_left(img, src));
  for (const auto& g : fiber->cohomology->generators()) {
    Element e = Element::generator(fiber->cohomology, g.name);
    images.push_back(embed_right(e, src));
  }
  return CatalogMap{source_product, target_product, RingMap(tgt, src, images)};
}

/// f_! = PD_{M1} o f^* o PD_{M2}^{-1}.
inline HomologyClass umkehr(const CatalogMap& f, const HomologyClass& x) {
  if (x.space != f.target && !same_ring(x.space->cohomology, f.target->cohomology)) {
    throw DomainError("umkehr: class does not live on the target of the map");
  }
  Element u = poincare_dual_inverse(x);
  int q = f.target->dim - x.degree;
  return poincare_dual(f.source, f.pullback(u), q);
}

// ---------------------------------------------------------------- towers

struct TowerLevel {
  int n = 0;
  RingPtr ring;
  DegreeWindow range;  // degrees where the level can be nonzero
};

struct TowerMap {
  int from = 0;  // level index n + 1
  int to = 0;    // level index n
  RingMap map;
  std::map<int, bool> iso;  // per degree in the source range
  std::optional<int> iso_from_degree;  // every degree >= this is an isomorphism
  bool homomorphism_checked = false;
};

struct Tower {
  std::string name;
  std::vector<TowerLevel> levels;
  std::vector<TowerMap> maps;  // maps[i] : levels[i+1] -> levels[i]
};

namespace detail {

inline Matrix map_matrix(const RingMap& f, const std::vector<Monomial>& src, const std::vector<Monomial>& dst) {
  Matrix m(dst.size(), Vector(src.size(), 0));
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector v = coordinates(f(Element::monomial(f.source(), src[c])), dst);
    for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = v[r];
  }
  return m;
}

inline bool is_isomorphism(const Matrix& m, std::size_t rows, std::size_t cols, const Coefficients& coeffs) {
  if (rows != cols) return false;
  if (rows == 0) return true;
  return inverse(m, coeffs).has_value();
}

inline TowerMap make_tower_map(const TowerLevel& from, const TowerLevel& to, RingMap f) {
  TowerMap t{from.n, to.n, std::move(f), {}, std::nullopt, false};
  const auto& coeffs = from.ring->coefficients();
  for (int d = from.range.lo; d <= from.range.hi; ++d) {
    auto src = from.ring->basis_in_degree(d);
    auto dst = to.range.contains(d) ? to.ring->basis_in_degree(d) : std::vector<Monomial>{};
    t.iso[d] = is_isomorphism(map_matrix(t.map, src, dst), dst.size(), src.size(), coeffs);
  }
  for (auto it = t.iso.rbegin(); it != t.iso.rend() && it->second; ++it) t.iso_from_degree = it->first;
  // Ring homomorphism on all basis products inside the source range.
  std::vector<Monomial> basis;
  for (int d = from.range.lo; d <= from.range.hi; ++d) {
    for (auto& m : from.ring->basis_in_degree(d)) basis.push_back(std::move(m));
  }
  for (const auto& a : basis) {
    Element x = Element::monomial(from.ring, a);
    for (const auto& b : basis) {
      Element y = Element::monomial(from.ring, b);
      if (!(t.map(x * y) == t.map(x) * t.map(y))) {
        throw DomainError("tower map " + std::to_string(from.n) + " -> " + std::to_string(to.n) +
                          " is not multiplicative on " + x.to_string() + " , " + y.to_string());
      }
    }
  }
  t.homomorphism_checked = true;
  return t;
}

}  // namespace detail

/// Levels HH_*(CP^n x S^1) = Lambda(t) (x) Z[c]/c^{n+1}, n = 1..N, with the
/// maps c -> c, t -> t. Each map is checked against the umkehr map of
/// CP^n -> CP^{n+1} (times the identity of S^1) on every basis element.
inline Tower s1_tower(int levels, Coefficients coeffs = Coefficients::integers()) {
  if (levels < 1) throw DomainError("s1_tower: need at least one level");
  Tower tower{"s1", {}, {}};
  std::vector<StringRing> rings;
  for (int n = 1; n <= levels; ++n) {
    rings.push_back(string_ring(trivial_model(cpn(n, coeffs), circle(coeffs))));
    tower.levels.push_back({n, rings.back().ring, rings.back().window});
  }
  for (int n = 1; n < levels; ++n) {
    const auto& big = rings[static_cast<std::size_t>(n)];
    const auto& small = rings[static_cast<std::size_t>(n - 1)];
    auto f = RingMap::from_strings(big.ring, small.ring, {"c", "t"});
    auto inc = cp_inclusion(n, coeffs);
    for (int d = big.window.lo; d <= big.window.hi; ++d) {
      for (const auto& m : big.ring->basis_in_degree(d)) {
        auto [x, t] = big.split(m);
        int kx = big.base.ring->degree(x);
        auto hx = umkehr(inc, big.base.to_homology(Element::monomial(big.base.ring, x), kx));
        Element shriek = small.base.from_homology(hx);
        Element expected = embed_left(shriek, small.ring) * embed_right(Element::monomial(small.fiber.homology, t), small.ring);
        if (!(f(Element::monomial(big.ring, m)) == expected)) {
          throw DomainError("s1_tower: projection disagrees with the umkehr map on " + Element::monomial(big.ring, m).to_string());
        }
      }
    }
    tower.maps.push_back(detail::make_tower_map(tower.levels[static_cast<std::size_t>(n)],
                                                tower.levels[static_cast<std::size_t>(n - 1)], f));
  }
  return tower;
}

/// Constant tower of one ring with identity maps.
inline Tower constant_tower(const RingPtr& ring, DegreeWindow range, int levels) {
  Tower tower{"constant", {}, {}};
  for (int n = 1; n <= levels; ++n) tower.levels.push_back({n, ring, range});
  std::vector<Element> images;
  for (const auto& g : ring->generators()) images.push_back(Element::generator(ring, g.name));
  for (int n = 1; n < levels; ++n) {
    tower.maps.push_back(detail::make_tower_map(tower.levels[static_cast<std::size_t>(n)],
                                                tower.levels[static_cast<std::size_t>(n - 1)], RingMap(ring, ring, images)));
  }
  return tower;
}

/// Degreewise limit on a window: the top level, provided the last map is an
/// isomorphism in every degree of the window. Products are truncated to it.
struct LimitRing {
  RingPtr ring;
  DegreeWindow window;

  std::vector<Monomial> basis(int d) const { return window.contains(d) ? ring->basis_in_degree(d) : std::vector<Monomial>{}; }

  Element multiply(const Element& a, const Element& b) const {
    Element p = a * b;
    Element out(ring);
    for (int d = window.lo; d <= window.hi; ++d) out += p.component(d);
    return out;
  }
};

inline LimitRing tower_limit(const Tower& tower, DegreeWindow window) {
  if (tower.levels.empty()) throw DomainError("tower_limit: empty tower");
  const auto& top = tower.levels.back();
  if (!tower.maps.empty()) {
    const auto& last = tower.maps.back();
    for (int d = window.lo; d <= window.hi; ++d) {
      auto it = last.iso.find(d);
      bool ok = it != last.iso.end() ? it->second : top.ring->basis_in_degree(d).empty();
      if (!ok) {
        // Earliest level from which the maps stay isomorphisms in degree d, if any.
        std::string need = "more levels";
        for (std::size_t i = tower.maps.size(); i-- > 0;) {
          auto jt = tower.maps[i].iso.find(d);
          if (jt != tower.maps[i].iso.end() && jt->second) need = "level " + std::to_string(tower.maps[i].to);
          else break;
        }
        throw DomainError("tower_limit: degree " + std::to_string(d) + " has not stabilized by level " +
                          std::to_string(top.n) + " (needs " + need + ")");
      }
    }
  }
  return LimitRing{top.ring, window};
}

// ---------------------------------------------------------------- BO(2)

enum class Sq1Verdict { Zero, Injective, Undetermined };

inline std::string to_string(Sq1Verdict v) {
  switch (v) {
    case Sq1Verdict::Zero: return "zero";
    case Sq1Verdict::Injective: return "injective";
    case Sq1Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

/// Trivial side at level n: E_n = Gr_{2,n} x O(2) with the twist -TGr pulled back.
struct TrivialO2Level {
  int n = 0;
  StringRing string;
  ManifoldPtr total;
  VirtualBundleTwist twist;
  std::vector<Monomial> h1_basis;        // string-ring monomials in shifted degree 1
  std::vector<HomologyClass> h1_classes;  // the same classes in H_{d+1}(E_n)
  std::vector<HomologyClass> sq1t;        // x Sq^1_t for each basis class
  Sq1Verdict verdict = Sq1Verdict::Zero;
};

inline TrivialO2Level trivial_o2_level(int n) {
  auto gr = grassmannian2(n);
  auto fiber = o2();
  auto total = product(gr, fiber.space);
  auto twist = pullback_left(minus_tangent(gr), total->cohomology);
  TrivialO2Level level{n, string_ring(trivial_model(gr, fiber)), total, twist, {}, {}, {}, Sq1Verdict::Zero};
  level.h1_basis = level.string.ring->basis_in_degree(1);
  bool all_zero = true;
  for (const auto& m : level.h1_basis) {
    auto h = product_homology(level.string, level.total, Element::monomial(level.string.ring, m), 1);
    auto image = right_action(h, 1, level.twist);
    all_zero = all_zero && image.is_zero();
    level.h1_classes.push_back(h);
    level.sq1t.push_back(image);
  }
  level.verdict = all_zero ? Sq1Verdict::Zero : Sq1Verdict::Undetermined;
  return level;
}

/// Adjoint side at level n, from the component facts.
struct AdjointO2Level {
  int n = 0;
  AdjointO2Facts facts;
  std::size_t h1_dim = 0;  // one top class per component
  Sq1Verdict verdict = Sq1Verdict::Undetermined;
  std::string reason;
};

inline AdjointO2Level adjoint_o2_level(int n) {
  AdjointO2Level level{n, adjoint_o2_facts(n), 0, Sq1Verdict::Undetermined, {}};
  level.h1_dim = static_cast<std::size_t>(level.facts.components);
  if (n % 2 == 0) {
    // w1(-TGr_{2,n}) = 0, so Sq^1_t = Sq^1, which is onto the top class of each
    // non-orientable component; dually y Sq^1_t != 0 for every y != 0.
    bool onto = wu_surjectivity_test({level.facts.component_dim, level.facts.components_orientable, true});
    level.verdict = onto ? Sq1Verdict::Injective : Sq1Verdict::Zero;
    level.reason = onto ? "components non-orientable; Sq^1 onto each top class" : "components orientable";
  } else {
    level.reason = "components orientable but w1(-TM) != 0; Sq^1_t is not settled by the Wu rule alone";
  }
  return level;
}

struct O2Comparison {
  std::vector<TrivialO2Level> trivial;
  std::vector<AdjointO2Level> adjoint;
  std::vector<Matrix> trivial_h1_maps;  // level n+1 -> level n, via umkehr of Gr x O(2)
  std::vector<Matrix> adjoint_h1_maps;  // transpose of the H^0 restriction
  std::vector<bool> trivial_maps_iso;
  std::vector<bool> adjoint_maps_iso;
  std::vector<int> witness_levels;
  bool inequivalent = false;
  std::string invariant = "right action of Sq^1_t on HH_1";
  std::string statement;
};

inline O2Comparison o2_comparison(int levels) {
  if (levels < 4) throw DomainError("o2_comparison: needs levels up to at least n = 4");
  O2Comparison out;
  auto f2 = Coefficients::prime_field(2);
  for (int n = 3; n <= levels; ++n) {
    out.trivial.push_back(trivial_o2_level(n));
    out.adjoint.push_back(adjoint_o2_level(n));
  }
  auto o2m = o2_space();
  for (int n = 3; n < levels; ++n) {
    const auto& small = out.trivial[static_cast<std::size_t>(n - 3)];
    const auto& big = out.trivial[static_cast<std::size_t>(n - 2)];
    auto f = times_identity(gr_inclusion(n), o2m, small.total, big.total);
    Matrix m(small.h1_classes.size(), Vector(big.h1_classes.size(), 0));
    for (std::size_t c = 0; c < big.h1_classes.size(); ++c) {
      auto image = umkehr(f, big.h1_classes[c]);
      // express in the level-n basis of HH_1
      Matrix cols;
      for (const auto& h : small.h1_classes) cols.push_back(h.coords);
      Matrix a = transpose(cols);
      Matrix square;
      // h1 classes are independent; pick rows to make the system square
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < a.size() && rows.size() < cols.size(); ++r) {
        Matrix trial = square;
        trial.push_back(a[r]);
        if (rank(trial, f2) == trial.size()) {
          square = trial;
          rows.push_back(r);
        }
      }
      Vector rhs;
      for (auto r : rows) rhs.push_back(image.coords[r]);
      auto x = solve(square, rhs, f2);
      if (!x) throw DomainError("o2_comparison: umkehr image leaves HH_1");
      for (std::size_t r = 0; r < x->size(); ++r) m[r][c] = (*x)[r];
    }
    out.trivial_h1_maps.push_back(m);
    out.trivial_maps_iso.push_back(m.size() == m.front().size() && rank(m, f2) == m.size());
    // Both components of Ad(E_{n+1}) restrict to the matching components of
    // Ad(E_n), so the H^0 restriction is the identity.
    Matrix id{{1, 0}, {0, 1}};
    out.adjoint_h1_maps.push_back(transpose(id));
    out.adjoint_maps_iso.push_back(rank(id, f2) == 2);
  }
  // Odd levels: the HH_1 maps are isomorphisms commuting with Sq^1_t, so an
  // injective verdict at level n - 1 pulls back to level n.
  for (std::size_t i = 1; i < out.adjoint.size(); ++i) {
    auto& level = out.adjoint[i];
    const auto& below = out.adjoint[i - 1];
    if (level.verdict == Sq1Verdict::Undetermined && below.verdict == Sq1Verdict::Injective && out.adjoint_maps_iso[i - 1]) {
      level.verdict = Sq1Verdict::Injective;
      level.reason = "transported from level " + std::to_string(below.n) + " along the HH_1 isomorphism";
    }
  }
  bool maps_ok = std::all_of(out.trivial_maps_iso.begin(), out.trivial_maps_iso.end(), [](bool b) { return b; }) &&
                 std::all_of(out.adjoint_maps_iso.begin(), out.adjoint_maps_iso.end(), [](bool b) { return b; });
  for (std::size_t i = 0; i < out.trivial.size(); ++i) {
    const auto& t = out.trivial[i];
    const auto& a = out.adjoint[i];
    if (t.n % 2 == 0 && t.verdict == Sq1Verdict::Zero && a.verdict == Sq1Verdict::Injective && !t.h1_basis.empty()) {
      out.witness_levels.push_back(t.n);
    }
  }
  out.inequivalent = maps_ok && !out.witness_levels.empty();
  if (out.inequivalent) {
    out.statement = "at level " + std::to_string(out.witness_levels.front()) +
                    " every class of HH_1(Gr x O(2)) is killed by Sq^1_t while no nonzero class of HH_1(Ad E) is; "
                    "the HH_1 maps are isomorphisms on both sides, so the towers are not equivalent";
  } else {
    out.statement = "no level separates the towers";
  }
  return out;
}

}  // namespace strops
