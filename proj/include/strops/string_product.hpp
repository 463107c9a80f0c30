#pragma once

// Shifted intersection rings, string products of trivial fiberwise monoids
// M x F, module actions, the E^2 page H^*(M; H_*(F)), and the structure maps
// p_*, s_*, c.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strops/manifold_catalog.hpp"
#include "strops/steenrod.hpp"

namespace strops {

/// HH_*(M) = H_{*+d}(M) with the intersection product, presented as H^*(M)
/// with degrees negated: the generator dual to g is PD(g) in degree -|g|.
struct IntersectionRing {
  ManifoldPtr base;
  RingPtr ring;

  Element to_cohomology(const Element& a) const { return transport(a, base->cohomology); }
  Element from_cohomology(const Element& x) const { return transport(x, ring); }

  /// The homology class of a homogeneous a in shifted degree k.
  HomologyClass to_homology(const Element& a, int k) const {
    if (!same_ring(a.ring(), ring)) throw DomainError("to_homology: element of another ring");
    return poincare_dual(base, to_cohomology(a), -k);
  }
  HomologyClass to_homology(const Element& a) const {
    auto d = a.degree();
    if (!d) throw DomainError("to_homology: zero or inhomogeneous class needs an explicit degree");
    return to_homology(a, *d);
  }
  Element from_homology(const HomologyClass& h) const { return from_cohomology(poincare_dual_inverse(h)); }

  Element fundamental() const { return Element::one(ring); }
};

inline IntersectionRing intersection_ring(const ManifoldPtr& m) {
  if (!m->duality_available()) {
    throw DomainError(m->name + " is not orientable over " + m->coefficients().name() + "; no intersection ring");
  }
  return IntersectionRing{m, negate_degrees(m->cohomology, m->dual_names)};
}

/// a . b computed through homology: PD(PD^{-1}(a) u PD^{-1}(b)).
inline Element intersection_product_via_pd(const IntersectionRing& r, const HomologyClass& a, const HomologyClass& b) {
  Element x = poincare_dual_inverse(a) * poincare_dual_inverse(b);
  int q = (r.base->dim - a.degree) + (r.base->dim - b.degree);
  if (q > r.base->dim) return Element(r.ring);
  return r.from_homology(poincare_dual(r.base, x, q));
}

enum class MonoidShape { TrivialProduct, AdjointO2 };

struct FiberwiseMonoidModel {
  ManifoldPtr base;
  PontrjaginRing fiber;
  MonoidShape shape = MonoidShape::TrivialProduct;
  std::optional<AdjointO2Facts> adjoint;
};

inline FiberwiseMonoidModel trivial_model(ManifoldPtr base, PontrjaginRing fiber) {
  if (!(base->coefficients() == fiber.homology->coefficients())) throw DomainError("base and fiber coefficients differ");
  return FiberwiseMonoidModel{std::move(base), std::move(fiber), MonoidShape::TrivialProduct, std::nullopt};
}

inline FiberwiseMonoidModel adjoint_o2_model(int n) {
  return FiberwiseMonoidModel{grassmannian2(n), o2(), MonoidShape::AdjointO2, adjoint_o2_facts(n)};
}

/// HH_*(M x F) = HH_*(M) (x) H_*(F). Monomials put the base generators first.
struct StringRing {
  IntersectionRing base;
  PontrjaginRing fiber;
  RingPtr ring;
  DegreeWindow window;

  std::size_t base_size() const { return base.ring->size(); }

  std::pair<Monomial, Monomial> split(const Monomial& m) const {
    auto mid = m.begin() + static_cast<std::ptrdiff_t>(base_size());
    return {Monomial(m.begin(), mid), Monomial(mid, m.end())};
  }

  std::vector<Monomial> basis(int k) const { return window.contains(k) ? ring->basis_in_degree(k) : std::vector<Monomial>{}; }

  /// All basis monomials in the window, highest degree first.
  std::vector<std::pair<int, Monomial>> window_basis() const {
    std::vector<std::pair<int, Monomial>> out;
    for (int k = window.hi; k >= window.lo; --k) {
      for (auto& m : ring->basis_in_degree(k)) out.emplace_back(k, std::move(m));
    }
    return out;
  }
};

inline DegreeWindow full_window(const FiberwiseMonoidModel& model) {
  int hi = model.fiber.space ? model.fiber.space->dim : model.fiber.homology->degree_bound();
  return DegreeWindow{-model.base->dim, hi};
}

inline StringRing string_ring(const FiberwiseMonoidModel& model, std::optional<DegreeWindow> window = std::nullopt) {
  if (model.shape != MonoidShape::TrivialProduct) {
    throw DomainError("string_ring is exact only for trivial products; use the E2 page or the adjoint facts");
  }
  auto base = intersection_ring(model.base);
  auto ring = tensor(base.ring, model.fiber.homology);
  return StringRing{base, model.fiber, ring, window.value_or(full_window(model))};
}

// ---------------------------------------------------------------- structure maps

/// p_*(x (x) f) = eps(f) x.
inline Element project_to_base(const StringRing& s, const Element& a) {
  Element out(s.base.ring);
  for (const auto& [m, c] : a.terms()) {
    auto [x, f] = s.split(m);
    Integer eps = s.fiber.augmentation(f);
    if (eps != 0) out += Element::monomial(s.base.ring, x, c * eps);
  }
  return out;
}

/// s_*(x) = x (x) 1.
inline Element unit_section(const StringRing& s, const Element& x) { return embed_left(x, s.ring); }

/// c(x (x) f) = kappa(x) f, kappa the coefficient of [M].
inline Element fiber_restriction(const StringRing& s, const Element& a) {
  Element out(s.fiber.homology);
  Monomial unit = s.base.ring->algebra().unit();
  for (const auto& [m, c] : a.terms()) {
    auto [x, f] = s.split(m);
    if (x == unit) out += Element::monomial(s.fiber.homology, f, c);
  }
  return out;
}

struct HomCheck {
  std::string name;
  bool passed = true;
  std::size_t pairs = 0;
  std::string counterexample;
};

struct StructureReport {
  std::vector<HomCheck> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const HomCheck& c) { return c.passed; });
  }
};

inline StructureReport verify_structure_homs(const FiberwiseMonoidModel& model,
                                             std::optional<DegreeWindow> window = std::nullopt) {
  auto s = string_ring(model, window);
  auto basis = s.window_basis();
  StructureReport report;

  HomCheck p{"p_* : HH(E) -> HH(M)"};
  HomCheck c{"c : HH(E) -> H(F)"};
  for (const auto& [da, ma] : basis) {
    Element a = Element::monomial(s.ring, ma);
    for (const auto& [db, mb] : basis) {
      Element b = Element::monomial(s.ring, mb);
      Element ab = a * b;
      ++p.pairs;
      ++c.pairs;
      if (p.passed && !(project_to_base(s, ab) == project_to_base(s, a) * project_to_base(s, b))) {
        p.passed = false;
        p.counterexample = a.to_string() + " , " + b.to_string();
      }
      if (c.passed && !(fiber_restriction(s, ab) == fiber_restriction(s, a) * fiber_restriction(s, b))) {
        c.passed = false;
        c.counterexample = a.to_string() + " , " + b.to_string();
      }
    }
  }
  // unit to unit
  if (!(project_to_base(s, Element::one(s.ring)) == Element::one(s.base.ring))) p.passed = false;
  if (!(fiber_restriction(s, Element::one(s.ring)) == Element::one(s.fiber.homology))) c.passed = false;

  HomCheck sec{"s_* : HH(M) -> HH(E)"};
  std::vector<Monomial> base_basis;
  for (int k = std::min(0, s.window.hi); k >= std::max(-model.base->dim, s.window.lo); --k) {
    for (auto& m : s.base.ring->basis_in_degree(k)) base_basis.push_back(std::move(m));
  }
  for (const auto& mx : base_basis) {
    Element x = Element::monomial(s.base.ring, mx);
    for (const auto& my : base_basis) {
      Element y = Element::monomial(s.base.ring, my);
      ++sec.pairs;
      if (sec.passed && !(unit_section(s, x * y) == unit_section(s, x) * unit_section(s, y))) {
        sec.passed = false;
        sec.counterexample = x.to_string() + " , " + y.to_string();
      }
    }
  }
  if (!(unit_section(s, Element::one(s.base.ring)) == Element::one(s.ring))) sec.passed = false;

  report.checks = {p, sec, c};
  return report;
}

// ---------------------------------------------------------------- homology of M x F

/// The class of a in H_*(M x F), in the basis Kronecker-dual to the monomial
/// basis of H^*(M) (x) H^*(F). Uses <u x v, h x f> = (-1)^{|v||h|} <u,h><v,f>.
inline HomologyClass product_homology(const StringRing& s, const ManifoldPtr& total, const Element& a, int k) {
  if (!s.fiber.space) throw DomainError("fiber " + s.fiber.name + " has no cohomology model");
  if (total->cohomology->size() != s.base.base->cohomology->size() + s.fiber.space->cohomology->size()) {
    throw DomainError("product_homology: total space does not match the model");
  }
  int d = s.base.base->dim;
  int degree = k + d;
  HomologyClass out{total, degree, {}};
  if (degree < 0) return out;
  auto basis = total->cohomology->basis_in_degree(degree);
  out.coords.assign(basis.size(), 0);
  std::size_t nb = s.base.base->cohomology->size();
  const auto& mcoh = s.base.base->cohomology;
  const auto& fcoh = s.fiber.space->cohomology;
  for (const auto& [m, c] : a.terms()) {
    auto [x, f] = s.split(m);
    int fdeg = s.fiber.homology->degree(f);
    int hdeg = d + s.base.ring->degree(x);
    HomologyClass h = s.base.to_homology(Element::monomial(s.base.ring, x), s.base.ring->degree(x));
    auto hbasis = mcoh->basis_in_degree(hdeg);
    auto vbasis = fcoh->basis_in_degree(fdeg);
    auto fbasis = s.fiber.homology->basis_in_degree(fdeg);
    std::size_t fj = static_cast<std::size_t>(std::find(fbasis.begin(), fbasis.end(), f) - fbasis.begin());
    const Matrix& kr = s.fiber.kronecker.at(fdeg);
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
      Monomial u(basis[idx].begin(), basis[idx].begin() + static_cast<std::ptrdiff_t>(nb));
      Monomial v(basis[idx].begin() + static_cast<std::ptrdiff_t>(nb), basis[idx].end());
      if (mcoh->degree(u) != hdeg || fcoh->degree(v) != fdeg) continue;
      std::size_t ui = static_cast<std::size_t>(std::find(hbasis.begin(), hbasis.end(), u) - hbasis.begin());
      std::size_t vi = static_cast<std::size_t>(std::find(vbasis.begin(), vbasis.end(), v) - vbasis.begin());
      int sign = (fdeg * hdeg) % 2 != 0 ? -1 : 1;
      out.coords[idx] += c * sign * h.coords[ui] * kr[vi][fj];
    }
  }
  for (auto& v : out.coords) v = total->coefficients().normalize(v);
  return out;
}

// ---------------------------------------------------------------- modules

/// One cyclic summand H_*(F)/I, generator in degree shift.
struct ModuleSummand {
  std::string name;
  int shift = 0;
  RingPtr quotient;  // same generators as the fiber ring, extra relations I
};

struct FiberModule {
  std::string name;
  std::vector<ModuleSummand> summands;
};

/// H_*(F)/(extra) as a module over H_*(F).
inline ModuleSummand quotient_summand(const PontrjaginRing& fiber, const std::string& name, int shift,
                                      const std::vector<std::string>& extra) {
  std::vector<Terms> rels = fiber.homology->relations();
  for (const auto& r : extra) rels.push_back(fiber.homology->algebra().parse(r));
  auto q = make_ring(fiber.homology->generators(), rels, fiber.homology->coefficients(), fiber.homology->degree_bound());
  return ModuleSummand{name, shift, q};
}

struct ModuleBasisElement {
  std::size_t summand = 0;
  Monomial monomial;  // in tensor(HH(M), quotient)
  int degree = 0;
};

struct ModuleActionEntry {
  std::size_t ring_index = 0;
  std::size_t module_index = 0;
  Vector result;  // coordinates in the module basis
};

struct ModuleTable {
  StringRing algebra;
  std::vector<RingPtr> summand_rings;   // tensor(HH(M), quotient_j)
  std::vector<int> shifts;
  std::vector<std::pair<int, Monomial>> ring_basis;
  std::vector<ModuleBasisElement> module_basis;
  std::vector<ModuleActionEntry> entries;
  bool associative = true;
  bool unital = true;
  std::string counterexample;
};

namespace detail {

using ModuleVector = std::vector<Element>;  // one component per summand

inline ModuleVector act(const ModuleTable& t, const std::vector<RingMap>& maps, const Element& a, const ModuleVector& v) {
  ModuleVector out;
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(maps[j](a) * v[j]);
  return out;
}

inline Vector module_coordinates(const ModuleTable& t, const ModuleVector& v, const DegreeWindow& w) {
  Vector out(t.module_basis.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (const auto& [m, c] : v[j].terms()) {
      int deg = t.summand_rings[j]->degree(m) + t.shifts[j];
      if (!w.contains(deg)) continue;
      for (std::size_t i = 0; i < t.module_basis.size(); ++i) {
        if (t.module_basis[i].summand == j && t.module_basis[i].monomial == m) out[i] = c;
      }
    }
  }
  return out;
}

}  // namespace detail

/// HH_*(M) (x) F' as a module over HH_*(M) (x) H_*(F); the action is the
/// intersection product tensored with the fiber action, Koszul signs included.
inline ModuleTable module_structure(const FiberwiseMonoidModel& model, const FiberModule& module,
                                    std::optional<DegreeWindow> window = std::nullopt) {
  ModuleTable t{string_ring(model, window), {}, {}, {}, {}, {}};
  const auto& s = t.algebra;
  std::vector<RingMap> maps;
  for (const auto& summand : module.summands) {
    if (!(summand.quotient->coefficients() == s.ring->coefficients())) throw DomainError("module: incompatible coefficients");
    if (summand.quotient->generators() != s.fiber.homology->generators()) {
      throw DomainError("module summand " + summand.name + " is not a quotient of the fiber ring");
    }
    auto ring = tensor(s.base.ring, summand.quotient);
    std::vector<Element> images;
    for (const auto& g : ring->generators()) images.push_back(Element::generator(ring, g.name));
    maps.emplace_back(s.ring, ring, images);
    t.summand_rings.push_back(ring);
    t.shifts.push_back(summand.shift);
  }
  t.ring_basis = s.window_basis();
  for (std::size_t j = 0; j < t.summand_rings.size(); ++j) {
    for (int k = s.window.hi; k >= s.window.lo; --k) {
      int inner = k - t.shifts[j];
      if (std::abs(inner) > t.summand_rings[j]->degree_bound()) continue;
      for (auto& m : t.summand_rings[j]->basis_in_degree(inner)) t.module_basis.push_back({j, std::move(m), k});
    }
  }
  auto vector_of = [&](std::size_t i) {
    detail::ModuleVector v;
    for (const auto& r : t.summand_rings) v.emplace_back(r);
    const auto& b = t.module_basis[i];
    v[b.summand] = Element::monomial(t.summand_rings[b.summand], b.monomial);
    return v;
  };
  for (std::size_t a = 0; a < t.ring_basis.size(); ++a) {
    Element x = Element::monomial(s.ring, t.ring_basis[a].second);
    for (std::size_t i = 0; i < t.module_basis.size(); ++i) {
      auto r = detail::act(t, maps, x, vector_of(i));
      t.entries.push_back({a, i, detail::module_coordinates(t, r, s.window)});
    }
  }
  for (std::size_t i = 0; i < t.module_basis.size(); ++i) {
    auto v = vector_of(i);
    auto one = detail::act(t, maps, Element::one(s.ring), v);
    if (one != v) t.unital = false;
    for (const auto& [da, ma] : t.ring_basis) {
      Element a = Element::monomial(s.ring, ma);
      for (const auto& [db, mb] : t.ring_basis) {
        Element b = Element::monomial(s.ring, mb);
        auto left = detail::act(t, maps, a * b, v);
        auto right = detail::act(t, maps, a, detail::act(t, maps, b, v));
        if (t.associative && left != right) {
          t.associative = false;
          t.counterexample = a.to_string() + " , " + b.to_string();
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- E2 page

struct BigradedAlgebraPage {
  ManifoldPtr base;
  PontrjaginRing fiber;
  RingPtr ring;  // H^*(M) (x) H_*(F), both positively graded
  int tmax = 0;
  std::map<std::pair<int, int>, std::vector<Monomial>> entries;  // key (-m, n), nonzero cells only
  std::optional<std::string> certificate;

  std::pair<int, int> bidegree(const Monomial& mono) const {
    std::size_t nb = base->cohomology->size();
    Monomial x(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(nb));
    Monomial f(mono.begin() + static_cast<std::ptrdiff_t>(nb), mono.end());
    return {-base->cohomology->degree(x), fiber.homology->degree(f)};
  }

  std::size_t dim(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second.size();
  }

  std::size_t total_dim(int k) const {
    std::size_t out = 0;
    for (const auto& [key, basis] : entries) {
      if (key.first + key.second == k) out += basis.size();
    }
    return out;
  }

  Element multiply(const Element& a, const Element& b) const { return a * b; }
};

inline BigradedAlgebraPage cjy_e2_page(const ManifoldPtr& m, const PontrjaginRing& f, int tmax) {
  if (!m->simply_connected) throw DomainError(m->name + " is not flagged simply connected");
  if (!(m->coefficients() == f.homology->coefficients())) throw DomainError("base and fiber coefficients differ");
  BigradedAlgebraPage page{m, f, tensor(m->cohomology, f.homology), tmax, {}, std::nullopt};
  int top_n = f.space ? f.space->dim : f.homology->degree_bound();
  bool all_even = true;
  for (int mm = 0; mm <= m->dim; ++mm) {
    auto xs = m->cohomology->basis_in_degree(mm);
    if (xs.empty()) continue;
    for (int n = 0; n <= std::min(top_n, tmax + mm); ++n) {
      auto fs = f.homology->basis_in_degree(n);
      if (fs.empty()) continue;
      if ((n - mm) % 2 != 0) all_even = false;
      auto& cell = page.entries[{-mm, n}];
      for (const auto& x : xs) {
        for (const auto& y : fs) {
          Monomial e(x);
          e.insert(e.end(), y.begin(), y.end());
          cell.push_back(e);
        }
      }
    }
  }
  // Nonzero cells beyond the truncation have the parity of the fiber generators.
  bool fiber_even = std::all_of(f.homology->generators().begin(), f.homology->generators().end(),
                                [](const Generator& g) { return g.degree % 2 == 0; });
  if (all_even && fiber_even) {
    page.certificate =
        "every nonzero entry has even total degree and d^r lowers total degree by 1, so E2 = E-infinity "
        "as bigraded groups";
  }
  return page;
}

}  // namespace strops
