#pragma once

// Thom-twisted squares Sq^i_t = sum_j Sq^j(-) u w_{i-j}(twist) and the dual
// right action on homology, <x, y Sq^i_t> = <Sq^i_t x, y>.

#include "strops/manifold_catalog.hpp"
#include "strops/sq_action.hpp"

namespace strops {

inline const SqAction& action_of(const ManifoldPtr& m) {
  if (!m->sq) throw DomainError(m->name + " has no registered Steenrod action");
  return *m->sq;
}

inline Element twisted_sq(int i, const Element& x, const VirtualBundleTwist& twist, const SqAction& action) {
  if (!same_ring(twist.ring, action.ring())) throw DomainError("twisted_sq: twist and action live in different rings");
  Element out(x.ring());
  for (int j = 0; j <= i; ++j) {
    Element s = sq(j, x, action);
    if (s.is_zero()) continue;
    out += s * twist.w(i - j);
  }
  return out;
}

/// Matrix of Sq^i_t from H^k to H^{k+i} in the monomial bases, columns indexed
/// by the source basis.
inline Matrix twisted_sq_matrix(int i, int k, const ManifoldPtr& space, const VirtualBundleTwist& twist) {
  const auto& action = action_of(space);
  auto src = space->cohomology->basis_in_degree(k);
  auto dst = space->cohomology->basis_in_degree(k + i);
  Matrix m(dst.size(), Vector(src.size(), 0));
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector v = coordinates(twisted_sq(i, Element::monomial(space->cohomology, src[c]), twist, action), dst);
    for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = v[r];
  }
  return m;
}

/// y Sq^i_t: the class in H_{deg y - i} with <b, y Sq^i_t> = <Sq^i_t b, y>.
inline HomologyClass right_action(const HomologyClass& y, int i, const VirtualBundleTwist& twist) {
  const auto& space = y.space;
  if (!same_ring(space->cohomology, twist.ring)) throw DomainError("right_action: twist is not over this space");
  HomologyClass out{space, y.degree - i, {}};
  if (out.degree < 0) return out;
  auto basis = space->cohomology->basis_in_degree(out.degree);
  const auto& action = action_of(space);
  for (const auto& b : basis) {
    out.coords.push_back(kronecker(twisted_sq(i, Element::monomial(space->cohomology, b), twist, action), y));
  }
  return out;
}

/// Facts about a connected closed F2-Poincare piece.
struct ComponentFacts {
  int dim = 0;
  bool orientable = false;
  bool pairing_nondegenerate = true;
};

/// Whether Sq^1 : H^{D-1} -> H^D is onto. By the Wu formula Sq^1 into the top
/// degree is cup with v1 = w1, and with a nondegenerate pairing that map is
/// nonzero exactly when w1 != 0, i.e. when the component is non-orientable.
inline bool wu_surjectivity_test(const ComponentFacts& c) {
  if (!c.pairing_nondegenerate) throw DomainError("wu_surjectivity_test: pairing must be nondegenerate");
  if (c.dim < 1) return false;
  return !c.orientable;
}

/// Direct computation of the same map on a connected catalog manifold.
inline bool top_sq1_surjective(const ManifoldPtr& m) {
  const auto& action = action_of(m);
  auto top = m->cohomology->basis_in_degree(m->dim);
  if (top.size() != 1) throw DomainError(m->name + " is not connected");
  for (const auto& b : m->cohomology->basis_in_degree(m->dim - 1)) {
    if (!sq(1, Element::monomial(m->cohomology, b), action).is_zero()) return true;
  }
  return false;
}

}  // namespace strops
