#pragma once

// Q_i on HH_*(M; F2) as PD o Sq^{q-i} o PD^{-1}, the (vanishing) Browder
// bracket, and a relation report.

#include <string>
#include <vector>

#include "strops/manifold_catalog.hpp"
#include "strops/sq_action.hpp"
#include "strops/string_product.hpp"

namespace strops {

struct QContext {
  ManifoldPtr manifold;
  IntersectionRing intersection;
  const SqAction* action = nullptr;
};

inline QContext q_context(const ManifoldPtr& m) {
  if (m->coefficients().characteristic() != 2) throw DomainError("Q operations need F2 coefficients");
  if (!m->sq) throw DomainError(m->name + " has no registered Steenrod action");
  return QContext{m, intersection_ring(m), &*m->sq};
}

/// PD(Sq^a): HH_{-q} -> HH_{-q-a}, going through the homology class.
inline Element pd_sq(int a, const Element& x, const QContext& ctx) {
  if (!x.is_homogeneous()) throw DomainError("PD(Sq): inhomogeneous class " + x.to_string());
  if (x.is_zero()) return x;
  int k = *x.degree();
  HomologyClass h = ctx.intersection.to_homology(x, k);
  Element u = poincare_dual_inverse(h);
  Element v = sq(a, u, *ctx.action);
  int q = -k + a;
  if (q > ctx.manifold->dim || a < 0) return Element(ctx.intersection.ring);
  return ctx.intersection.from_homology(poincare_dual(ctx.manifold, v, q));
}

/// Q_i(x) = PD(Sq^{q-i})(x) for x in HH_{-q}; lands in HH_{-2q+i}.
inline Element q_op(int i, const Element& x, const QContext& ctx) {
  if (i < 0) throw DomainError("Q_i needs i >= 0");
  if (!x.is_homogeneous()) throw DomainError("Q_i: inhomogeneous class " + x.to_string());
  if (x.is_zero()) return x;
  int q = -*x.degree();
  if (q - i < 0) return Element(ctx.intersection.ring);
  return pd_sq(q - i, x, ctx);
}

/// Result of the bracket lambda_{n-1}(x, y): always zero, with its degree.
struct BrowderValue {
  Element value;
  int degree = 0;
};

/// The bracket vanishes on HH_*(M) for oriented M; degree p + q + n - 1 with
/// n = dim M.
inline BrowderValue browder(const Element& x, const Element& y, const QContext& ctx) {
  if (!ctx.manifold->orientable_z) throw DomainError("browder: " + ctx.manifold->name + " is not orientable");
  int p = x.degree().value_or(0), q = y.degree().value_or(0);
  return BrowderValue{Element(ctx.intersection.ring), p + q + ctx.manifold->dim - 1};
}

struct RelationResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool verified = true;  // false: listed but not checked
  std::string first_failure;
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.failures == 0; });
  }
};

inline RelationReport relation_check(const QContext& ctx, int degree_bound) {
  const auto& ring = ctx.intersection.ring;
  int lo = std::max(-ctx.manifold->dim, -degree_bound);
  std::vector<Element> basis;
  for (int k = 0; k >= lo; --k) {
    for (const auto& m : ring->basis_in_degree(k)) basis.push_back(Element::monomial(ring, m));
  }
  auto check = [](RelationResult& r, bool ok, const std::string& where) {
    ++r.instances;
    if (!ok) {
      if (r.failures == 0) r.first_failure = where;
      ++r.failures;
    }
  };

  RelationResult top{"Q_q = id"}, vanish{"Q_i = 0 for i > q"}, square{"Q_0(x) = x . x"};
  RelationResult cartan{"Q_i(x . y) = sum_{j+k=i} Q_j(x) . Q_k(y)"};
  RelationResult additive{"Q_i(x + y) - Q_i(x) - Q_i(y) = browder(x, y) = 0"};
  RelationResult adem11{"PD(Sq^1) PD(Sq^1) = 0"}, adem12{"PD(Sq^1) PD(Sq^2) = PD(Sq^3)"};
  RelationResult adem22{"PD(Sq^2) PD(Sq^2) = PD(Sq^3) PD(Sq^1)"};
  for (const auto& x : basis) {
    int q = -*x.degree();
    std::string at = x.to_string();
    check(top, q_op(q, x, ctx) == x, at);
    for (int i = q + 1; i <= q + 3; ++i) check(vanish, q_op(i, x, ctx).is_zero(), at);
    check(square, q_op(0, x, ctx) == x * x, at);
    check(adem11, pd_sq(1, pd_sq(1, x, ctx), ctx).is_zero(), at);
    check(adem12, pd_sq(1, pd_sq(2, x, ctx), ctx) == pd_sq(3, x, ctx), at);
    check(adem22, pd_sq(2, pd_sq(2, x, ctx), ctx) == pd_sq(3, pd_sq(1, x, ctx), ctx), at);
    for (const auto& y : basis) {
      int r = -*y.degree();
      std::string pair = x.to_string() + " , " + y.to_string();
      if (q + r <= degree_bound) {
        for (int i = 0; i <= q + r; ++i) {
          Element rhs(ring);
          for (int j = 0; j <= i; ++j) rhs += q_op(j, x, ctx) * q_op(i - j, y, ctx);
          check(cartan, q_op(i, x * y, ctx) == rhs, pair);
        }
      }
      if (q == r) {
        for (int i = 0; i <= q; ++i) {
          Element cross = q_op(i, x + y, ctx) - q_op(i, x, ctx) - q_op(i, y, ctx);
          check(additive, cross.is_zero(), pair);
        }
      }
    }
  }
  RelationResult unstable{"unstable relation (not derivable from PD(Sq); unchecked)"};
  unstable.verified = false;
  return RelationReport{{top, vanish, square, cartan, additive, adem11, adem12, adem22, unstable}};
}

}  // namespace strops
