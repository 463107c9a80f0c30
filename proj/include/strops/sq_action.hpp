#pragma once

// Mod 2 Steenrod squares on presented F2 cohomology rings. An action is a table
// of total squares Sq(g) = sum_i Sq^i g on generators; everything else follows
// from Sq being a ring homomorphism (the Cartan formula).

#include <map>
#include <string>
#include <vector>

#include "strops/graded_algebra.hpp"

namespace strops {

class SqAction {
 public:
  SqAction() = default;

  /// table[g][i] = Sq^i of generator g, for i = 0..|g|. Validates instability
  /// and that the induced homomorphism kills every relation.
  SqAction(RingPtr ring, std::vector<std::vector<Element>> table) : ring_(std::move(ring)), table_(std::move(table)) {
    if (ring_->coefficients().characteristic() != 2) throw DomainError("Steenrod squares need F2 coefficients");
    const auto& gens = ring_->generators();
    if (table_.size() != gens.size()) throw DomainError("Sq table: one row per generator required");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int d = gens[g].degree;
      if (d < 0) throw DomainError("Sq table: generator " + gens[g].name + " has negative degree");
      if (table_[g].size() != static_cast<std::size_t>(d) + 1) {
        throw DomainError("Sq table: generator " + gens[g].name + " needs entries Sq^0..Sq^" + std::to_string(d));
      }
      Element gen = Element::generator(ring_, gens[g].name);
      for (int i = 0; i <= d; ++i) {
        const Element& v = table_[g][static_cast<std::size_t>(i)];
        if (!same_ring(v.ring(), ring_)) throw DomainError("Sq table entry in the wrong ring");
        if (!v.is_zero() && v.degree() != d + i) {
          throw DomainError("Sq^" + std::to_string(i) + " " + gens[g].name + " has the wrong degree");
        }
      }
      if (!(table_[g][0] == gen)) throw DomainError("Sq^0 " + gens[g].name + " must be " + gens[g].name);
      if (!(table_[g][static_cast<std::size_t>(d)] == gen * gen)) {
        throw DomainError("Sq^" + std::to_string(d) + " " + gens[g].name + " must be its square");
      }
      Element total(ring_);
      for (const auto& v : table_[g]) total += v;
      totals_.push_back(total);
    }
    for (const auto& r : ring_->relations()) {
      if (!total_square(r).is_zero()) {
        throw DomainError("Sq table does not preserve relation " + ring_->algebra().format(r));
      }
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  bool valid() const { return ring_ != nullptr; }

  /// Total square of a free-algebra polynomial, evaluated in the ring.
  Element total_square(const Terms& terms) const {
    Element out(ring_);
    for (const auto& [m, c] : terms) {
      Element term = Element::scalar(ring_, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) term *= totals_[i];
      }
      out += term;
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> totals_;
};

/// Sq^i x, computed degreewise from the total square.
inline Element sq(int i, const Element& x, const SqAction& action) {
  if (!action.valid()) throw DomainError("ring has no registered Steenrod action");
  if (!same_ring(x.ring(), action.ring())) throw DomainError("Sq applied to an element of another ring");
  if (i < 0) return Element(x.ring());
  Element out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    Element total = action.total_square(Terms{{m, c}});
    out += total.component(x.ring()->degree(m) + i);
  }
  return out;
}

/// Table from per-generator total squares written as polynomial strings.
inline SqAction sq_action_from_totals(const RingPtr& ring, const std::vector<std::string>& totals) {
  if (totals.size() != ring->size()) throw DomainError("Sq table: one total square per generator required");
  std::vector<std::vector<Element>> table;
  for (std::size_t g = 0; g < totals.size(); ++g) {
    Element total = Element::parse(ring, totals[g]);
    int d = ring->generators()[g].degree;
    std::vector<Element> row;
    for (int i = 0; i <= d; ++i) row.push_back(total.component(d + i));
    Element rest = total;
    for (const auto& v : row) rest -= v;
    if (!rest.is_zero()) throw DomainError("total square of " + ring->generators()[g].name + " has stray terms");
    table.push_back(std::move(row));
  }
  return SqAction(ring, std::move(table));
}

namespace detail {

// Rewrites a symmetric polynomial in F2[a, b] (exponent vectors {i, j}) as a
// polynomial in the elementary classes e1 = a + b, e2 = ab.
inline Terms symmetric_reduce(Terms f) {
  Terms out;
  FreeAlgebra ab({{"a", 1}, {"b", 1}}, Coefficients::prime_field(2));
  while (!f.empty()) {
    Monomial lead = f.begin()->first;
    int i = lead[0], j = lead[1];
    if (i < j) throw DomainError("symmetric_reduce: input is not symmetric");
    ab.add_term(out, Monomial{i - j, j}, 1);
    Terms e1{{Monomial{1, 0}, 1}, {Monomial{0, 1}, 1}};
    Terms piece{{Monomial{j, j}, 1}};
    for (int k = 0; k < i - j; ++k) piece = ab.multiply(piece, e1);
    for (const auto& [m, c] : piece) ab.add_term(f, m, c);
  }
  return out;
}

}  // namespace detail

/// Generator table for F2[w1, w2]/R (Gr_{2,n}) by the splitting principle:
/// w1 = a + b, w2 = ab, Sq(a) = a + a^2, Sq(b) = b + b^2.
inline SqAction grassmannian_sq_action(const RingPtr& ring) {
  if (ring->size() != 2 || ring->generators()[0].degree != 1 || ring->generators()[1].degree != 2) {
    throw DomainError("splitting-principle table expects generators of degrees 1 and 2");
  }
  FreeAlgebra ab({{"a", 1}, {"b", 1}}, Coefficients::prime_field(2));
  Terms sa{{Monomial{1, 0}, 1}, {Monomial{2, 0}, 1}};
  Terms sb{{Monomial{0, 1}, 1}, {Monomial{0, 2}, 1}};
  Terms sw1 = sa;
  for (const auto& [m, c] : sb) ab.add_term(sw1, m, c);
  Terms sw2 = ab.multiply(sa, sb);
  std::vector<std::vector<Element>> table;
  for (const auto& [total, degree] : {std::pair{sw1, 1}, std::pair{sw2, 2}}) {
    Element image(ring, detail::symmetric_reduce(total));
    std::vector<Element> row;
    for (int i = 0; i <= degree; ++i) row.push_back(image.component(degree + i));
    table.push_back(std::move(row));
  }
  return SqAction(ring, std::move(table));
}

/// Embeds the left (right) factor of tensor(a, b) into the tensor ring.
inline Element embed_left(const Element& x, const RingPtr& product) {
  Terms t;
  for (const auto& [m, c] : x.terms()) {
    Monomial e(m);
    e.resize(product->size(), 0);
    t.emplace(e, c);
  }
  return Element(product, t);
}

inline Element embed_right(const Element& x, const RingPtr& product) {
  Terms t;
  std::size_t offset = product->size() - x.ring()->size();
  for (const auto& [m, c] : x.terms()) {
    Monomial e(offset, 0);
    e.insert(e.end(), m.begin(), m.end());
    t.emplace(e, c);
  }
  return Element(product, t);
}

/// Action on tensor(a.ring, b.ring) with the Cartan formula across factors.
inline SqAction tensor_action(const SqAction& a, const SqAction& b, const RingPtr& product) {
  std::vector<std::vector<Element>> table;
  for (const auto& row : a.table()) {
    auto& out = table.emplace_back();
    for (const auto& v : row) out.push_back(embed_left(v, product));
  }
  for (const auto& row : b.table()) {
    auto& out = table.emplace_back();
    for (const auto& v : row) out.push_back(embed_right(v, product));
  }
  return SqAction(product, std::move(table));
}

}  // namespace strops
