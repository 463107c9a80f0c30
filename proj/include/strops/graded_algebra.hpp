#pragma once

// Exact arithmetic in finitely presented graded-commutative rings over Z and
// F_p. Relations act as a leading-term rewrite system under the lexicographic
// order on exponent vectors (first declared generator most significant). Since
// every relation is homogeneous this agrees with graded-lex on each relation.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strops/coefficients.hpp"
#include "strops/errors.hpp"
#include "strops/linalg.hpp"

namespace strops {

inline constexpr int kDefaultDegreeBound = 16;

/// Process-wide default for the confluence and enumeration bound. Change it
/// before building rings; the CLI reads STROPS_DEGREE_BOUND.
inline std::atomic<int>& degree_bound_setting() {
  static std::atomic<int> value{kDefaultDegreeBound};
  return value;
}
inline int default_degree_bound() { return degree_bound_setting().load(); }

struct Generator {
  std::string name;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector over the declared generators.
using Monomial = std::vector<int>;
/// Sparse polynomial, largest monomial first.
using Terms = std::map<Monomial, Integer, std::greater<Monomial>>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : m) h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Closed interval of degrees.
struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int d) const { return lo <= d && d <= hi; }

  /// Parses "a:b".
  static DegreeWindow parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DomainError("window must look like lo:hi");
    try {
      DegreeWindow w{std::stoi(std::string(text.substr(0, colon))),
                     std::stoi(std::string(text.substr(colon + 1)))};
      if (w.lo > w.hi) throw DomainError("empty degree window");
      return w;
    } catch (const std::logic_error&) {
      throw DomainError("window must look like lo:hi");
    }
  }
};

/// The free graded-commutative algebra on a list of generators: monomial
/// products with Koszul signs, and the polynomial string grammar.
class FreeAlgebra {
 public:
  FreeAlgebra(std::vector<Generator> gens, Coefficients coeffs)
      : gens_(std::move(gens)), coeffs_(coeffs) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
      if (!is_identifier(g.name)) throw DomainError("invalid generator name '" + g.name + "'");
      if (!seen.insert(g.name).second) throw DomainError("duplicate generator name '" + g.name + "'");
      bool odd = (g.degree % 2) != 0;
      odd_.push_back(odd);
      exterior_.push_back(odd && coeffs_.characteristic() != 2);
    }
  }

  const std::vector<Generator>& generators() const { return gens_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::size_t size() const { return gens_.size(); }
  bool is_exterior(std::size_t i) const { return exterior_[i]; }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == name) return i;
    }
    throw DomainError("unknown generator '" + std::string(name) + "'");
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
  }

  /// Size measure used by the confluence and enumeration bounds: |degree| per
  /// factor, with degree-0 generators counting 1.
  int weight(const Monomial& m) const {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * generator_weight(i);
    return w;
  }

  int generator_weight(std::size_t i) const { return std::max(1, std::abs(gens_[i].degree)); }

  Monomial unit() const { return Monomial(gens_.size(), 0); }

  Monomial generator_monomial(std::size_t i) const {
    Monomial m = unit();
    m[i] = 1;
    return m;
  }

  /// a·b in the free graded-commutative algebra; nullopt when an exterior
  /// generator would appear squared.
  std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b) const {
    SignedMonomial out{1, Monomial(a.size())};
    int parity = 0;
    int odd_after = 0;
    for (std::size_t j = a.size(); j-- > 0;) {
      if (odd_[j]) {
        parity ^= (odd_after * b[j]) & 1;
        odd_after += a[j];
      }
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      out.monomial[k] = a[k] + b[k];
      if (exterior_[k] && out.monomial[k] > 1) return std::nullopt;
    }
    if (parity != 0 && coeffs_.characteristic() != 2) out.sign = -1;
    return out;
  }

  bool divides(const Monomial& d, const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (d[i] > m[i]) return false;
    }
    return true;
  }

  void add_term(Terms& terms, const Monomial& m, const Integer& c) const {
    auto it = terms.find(m);
    if (it == terms.end()) {
      Integer v = coeffs_.normalize(c);
      if (v != 0) terms.emplace(m, std::move(v));
      return;
    }
    it->second = coeffs_.normalize(it->second + c);
    if (it->second == 0) terms.erase(it);
  }

  Terms multiply(const Terms& a, const Terms& b) const {
    Terms out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        auto p = multiply(ma, mb);
        if (p) add_term(out, p->monomial, ca * cb * p->sign);
      }
    }
    return out;
  }

  /// Grammar: terms joined by '+' (or '-'); term = [integer] ['*'] gen[^k] ('*' gen[^k])*.
  /// Factors multiply in the written order, so "t*c" and "c*t" carry Koszul signs.
  Terms parse(std::string_view text) const {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw DomainError("empty polynomial");
    Terms out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
      int sign = 1;
      if (!first && s[pos] != '+' && s[pos] != '-') {
        throw DomainError("malformed polynomial '" + std::string(text) + "'");
      }
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -sign;
        ++pos;
      }
      first = false;
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      parse_term(s.substr(pos, end - pos), sign, out, text);
      pos = end;
    }
    return out;
  }

  std::string format(const Terms& terms) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
      Integer v = c;
      bool negative = v < 0;
      if (negative) v = -v;
      if (!first) out += negative ? "-" : "+";
      else if (negative) out += "-";
      first = false;
      std::string mono = format_monomial(m);
      if (mono.empty()) {
        out += v.str();
      } else {
        if (v != 1) out += v.str() + "*";
        out += mono;
      }
    }
    return out;
  }

  std::string format_monomial(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += gens_[i].name;
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  static bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
  }

 private:
  void parse_term(const std::string& term, int sign, Terms& out, std::string_view text) const {
    if (term.empty() || term.back() == '*') throw DomainError("malformed polynomial '" + std::string(text) + "'");
    std::size_t pos = 0;
    Integer coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      std::size_t end = 0;
      while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end]))) ++end;
      coeff *= Integer(term.substr(0, end));
      pos = end;
      if (pos < term.size()) {
        if (term[pos] != '*') throw DomainError("malformed term '" + term + "'");
        ++pos;
      }
    }
    std::optional<SignedMonomial> acc = SignedMonomial{1, unit()};
    while (pos < term.size()) {
      std::size_t end = term.find('*', pos);
      if (end == std::string::npos) end = term.size();
      std::string factor = term.substr(pos, end - pos);
      std::size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      int power = 1;
      if (caret != std::string::npos) {
        std::string digits = factor.substr(caret + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
          throw DomainError("malformed exponent in '" + term + "'");
        }
        power = std::stoi(digits);
      }
      if (name == "1" && power == 1) {
        pos = end + 1;
        continue;
      }
      std::size_t g = index_of(name);
      for (int k = 0; k < power && acc; ++k) {
        auto next = multiply(acc->monomial, generator_monomial(g));
        if (next) next->sign *= acc->sign;
        acc = next;
      }
      pos = end + 1;
    }
    if (acc) add_term(out, acc->monomial, coeff * acc->sign);
  }

  std::vector<Generator> gens_;
  Coefficients coeffs_;
  std::vector<bool> odd_;
  std::vector<bool> exterior_;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(std::vector<Generator> gens, const std::vector<Terms>& relations,
                  Coefficients coeffs, int degree_bound = default_degree_bound());

/// A finitely presented graded-commutative ring. Immutable once built; only
/// make_ring constructs one, after checking that normal forms are canonical
/// below the degree bound.
class RingPresentation {
  struct Key {};

 public:
  struct Rule {
    Monomial lead;
    Terms replacement;  // lead == replacement in the quotient
  };

  RingPresentation(Key, FreeAlgebra algebra, std::vector<Terms> relations, int degree_bound)
      : algebra_(std::move(algebra)), relations_(std::move(relations)), degree_bound_(degree_bound) {
    for (const auto& r : relations_) {
      const auto& [lead, lc] = *r.begin();
      Integer inv = algebra_.coefficients().inverse(lc);
      Rule rule{lead, {}};
      for (auto it = std::next(r.begin()); it != r.end(); ++it) {
        algebra_.add_term(rule.replacement, it->first, -it->second * inv);
      }
      rules_.push_back(std::move(rule));
    }
  }

  RingPresentation(const RingPresentation&) = delete;
  RingPresentation& operator=(const RingPresentation&) = delete;

  const FreeAlgebra& algebra() const { return algebra_; }
  const std::vector<Generator>& generators() const { return algebra_.generators(); }
  const Coefficients& coefficients() const { return algebra_.coefficients(); }
  /// Relations as stored (free-algebra normal form, nonzero).
  const std::vector<Terms>& relations() const { return relations_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int degree_bound() const { return degree_bound_; }
  std::size_t size() const { return algebra_.size(); }
  std::size_t index_of(std::string_view name) const { return algebra_.index_of(name); }
  int degree(const Monomial& m) const { return algebra_.degree(m); }

  /// Index of the first rule whose lead divides m, if any.
  std::optional<std::size_t> first_rule(const Monomial& m) const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (algebra_.divides(rules_[i].lead, m)) return i;
    }
    return std::nullopt;
  }

  bool is_normal(const Monomial& m) const { return !first_rule(m).has_value(); }

  /// Normal form of a single monomial (coefficient 1).
  Terms normal_form(const Monomial& m) const {
    {
      std::lock_guard lock(cache_mutex_);
      auto it = cache_.find(m);
      if (it != cache_.end()) return it->second;
    }
    Terms out;
    auto r = first_rule(m);
    if (!r) {
      out.emplace(m, Integer(1));
    } else {
      const Rule& rule = rules_[*r];
      Monomial cofactor(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) cofactor[i] = m[i] - rule.lead[i];
      auto arranged = algebra_.multiply(cofactor, rule.lead);  // == sign * m
      if (arranged) {
        for (const auto& [t, c] : rule.replacement) {
          auto p = algebra_.multiply(cofactor, t);
          if (!p) continue;
          Integer factor = c * p->sign * arranged->sign;
          for (const auto& [n, cn] : normal_form(p->monomial)) algebra_.add_term(out, n, factor * cn);
        }
      }
    }
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(m, out);
    return out;
  }

  Terms normal_form(const Terms& terms) const {
    Terms out;
    for (const auto& [m, c] : terms) {
      for (const auto& [n, cn] : normal_form(m)) algebra_.add_term(out, n, c * cn);
    }
    return out;
  }

  /// Maximum exponent of generator i among normal monomials, or nullopt if unbounded.
  std::optional<int> exponent_cap(std::size_t i) const {
    if (algebra_.is_exterior(i)) return 1;
    std::optional<int> cap;
    for (const auto& rule : rules_) {
      bool pure = true;
      for (std::size_t j = 0; j < rule.lead.size(); ++j) {
        if (j != i && rule.lead[j] != 0) pure = false;
      }
      if (pure && rule.lead[i] > 0) cap = cap ? std::min(*cap, rule.lead[i] - 1) : rule.lead[i] - 1;
    }
    return cap;
  }

  /// Normal monomials of degree n, leading (largest) first.
  std::vector<Monomial> basis_in_degree(int n) const {
    if (std::abs(n) > degree_bound_) {
      throw DomainError("degree " + std::to_string(n) + " exceeds the verified bound " +
                        std::to_string(degree_bound_));
    }
    const auto& gens = generators();
    std::vector<int> caps(gens.size());
    int capped_span = 0;
    int uncapped_sign = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto cap = exponent_cap(i);
      if (cap) {
        caps[i] = *cap;
        capped_span += *cap * std::abs(gens[i].degree);
        continue;
      }
      int s = gens[i].degree > 0 ? 1 : (gens[i].degree < 0 ? -1 : 0);
      if (s == 0 || (uncapped_sign != 0 && s != uncapped_sign)) {
        throw DomainError("ring is not finite-dimensional in degree " + std::to_string(n));
      }
      uncapped_sign = s;
      caps[i] = -1;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (caps[i] < 0) caps[i] = (std::abs(n) + capped_span) / std::abs(gens[i].degree);
    }
    std::vector<Monomial> out;
    Monomial m(gens.size(), 0);
    enumerate(0, m, caps, n, out);
    std::sort(out.begin(), out.end(), std::greater<Monomial>());
    return out;
  }

  /// Structural equality of presentations (same generators, coefficients,
  /// relations and bound).
  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.generators() == b.generators() && a.coefficients() == b.coefficients() &&
           a.relations_ == b.relations_ && a.degree_bound_ == b.degree_bound_;
  }

  static std::shared_ptr<RingPresentation> create(FreeAlgebra algebra, std::vector<Terms> relations,
                                                  int degree_bound) {
    return std::make_shared<RingPresentation>(Key{}, std::move(algebra), std::move(relations),
                                              degree_bound);
  }

 private:
  void enumerate(std::size_t i, Monomial& m, const std::vector<int>& caps, int target,
                 std::vector<Monomial>& out) const {
    if (i == m.size()) {
      if (algebra_.degree(m) == target && is_normal(m)) out.push_back(m);
      return;
    }
    for (int e = 0; e <= caps[i]; ++e) {
      m[i] = e;
      if (e > 0 && !is_normal(m)) break;  // leading terms are closed under multiples
      enumerate(i + 1, m, caps, target, out);
    }
    m[i] = 0;
  }

  FreeAlgebra algebra_;
  std::vector<Terms> relations_;
  std::vector<Rule> rules_;
  int degree_bound_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Monomial, Terms, MonomialHash> cache_;
};

namespace detail {

inline void for_each_monomial_up_to(const FreeAlgebra& alg, int max_weight,
                                    const std::function<void(const Monomial&)>& fn) {
  Monomial m(alg.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == m.size()) {
      fn(m);
      return;
    }
    int w = alg.generator_weight(i);
    int cap = alg.is_exterior(i) ? 1 : budget / w;
    for (int e = 0; e <= cap && e * w <= budget; ++e) {
      m[i] = e;
      rec(i + 1, budget - e * w);
    }
    m[i] = 0;
  };
  if (max_weight >= 0) rec(0, max_weight);
}

}  // namespace detail

/// Builds and validates a presentation. Relations must be homogeneous with a
/// unit leading coefficient; normal forms are verified canonical for every
/// ideal element u·r with weight at most degree_bound (u a monomial, r a
/// relation). A failure reports the offending pair.
inline RingPtr make_ring(std::vector<Generator> gens, const std::vector<Terms>& relations,
                         Coefficients coeffs, int degree_bound) {
  FreeAlgebra alg(std::move(gens), coeffs);
  std::vector<Terms> rels;
  for (const auto& r : relations) {
    Terms clean;
    for (const auto& [m, c] : r) {
      if (m.size() != alg.size()) throw DomainError("relation has wrong number of exponents");
      alg.add_term(clean, m, c);
    }
    if (clean.empty()) continue;
    int d = alg.degree(clean.begin()->first);
    for (const auto& [m, c] : clean) {
      if (alg.degree(m) != d) throw DomainError("non-homogeneous relation " + alg.format(clean));
    }
    if (!coeffs.is_unit(clean.begin()->second)) {
      throw DomainError("relation " + alg.format(clean) + " has a non-unit leading coefficient");
    }
    if (std::find(rels.begin(), rels.end(), clean) == rels.end()) rels.push_back(std::move(clean));
  }
  auto ring = RingPresentation::create(alg, rels, degree_bound);

  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Terms& g = rels[r];
    int wg = 0;
    for (const auto& [m, c] : g) wg = std::max(wg, alg.weight(m));
    const Monomial& lead = ring->rules()[r].lead;
    detail::for_each_monomial_up_to(alg, degree_bound - wg, [&](const Monomial& u) {
      auto top = alg.multiply(u, lead);
      if (top && ring->first_rule(top->monomial) == r) return;  // reduces by r itself
      Terms ug = alg.multiply(Terms{{u, Integer(1)}}, g);
      Terms residue = ring->normal_form(ug);
      if (!residue.empty()) {
        throw DomainError("confluence failure: (" + alg.format(Terms{{u, Integer(1)}}) + ")*(" +
                          alg.format(g) + ") reduces to " + alg.format(residue) +
                          " instead of 0");
      }
    });
  }
  return ring;
}

inline RingPtr make_ring(std::vector<Generator> gens, const std::vector<std::string>& relations,
                         Coefficients coeffs, int degree_bound = default_degree_bound()) {
  FreeAlgebra alg(gens, coeffs);
  std::vector<Terms> parsed;
  for (const auto& r : relations) parsed.push_back(alg.parse(r));
  return make_ring(std::move(gens), parsed, coeffs, degree_bound);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// An element of a presented ring, always stored in normal form.
class Element {
 public:
  explicit Element(RingPtr ring) : ring_(std::move(ring)) {}
  Element(RingPtr ring, const Terms& terms) : ring_(std::move(ring)), terms_(ring_->normal_form(terms)) {}

  static Element one(RingPtr ring) { return monomial(ring, ring->algebra().unit()); }
  static Element scalar(RingPtr ring, const Integer& c) { return monomial(ring, ring->algebra().unit(), c); }
  static Element monomial(RingPtr ring, const Monomial& m, const Integer& c = 1) {
    Terms t;
    ring->algebra().add_term(t, m, c);
    return Element(std::move(ring), t);
  }
  static Element generator(RingPtr ring, std::string_view name) {
    std::size_t i = ring->index_of(name);
    return monomial(ring, ring->algebra().generator_monomial(i));
  }
  static Element parse(RingPtr ring, std::string_view text) {
    Terms t = ring->algebra().parse(text);
    return Element(std::move(ring), t);
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = ring_->degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return ring_->degree(t.first) == d; });
  }

  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return ring_->degree(terms_.begin()->first);
  }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Element component(int deg) const {
    Element out(ring_);
    for (const auto& [m, c] : terms_) {
      if (ring_->degree(m) == deg) out.terms_.emplace(m, c);
    }
    return out;
  }

  std::string to_string() const { return ring_->algebra().format(terms_); }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) ring_->algebra().add_term(terms_, m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) ring_->algebra().add_term(terms_, m, -c);
    return *this;
  }
  Element& operator*=(const Element& o) {
    check_same(o);
    terms_ = ring_->normal_form(ring_->algebra().multiply(terms_, o.terms_));
    return *this;
  }
  Element scaled(const Integer& c) const {
    Element out(ring_);
    for (const auto& [m, v] : terms_) ring_->algebra().add_term(out.terms_, m, v * c);
    return out;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator-(const Element& a) { return a.scaled(-1); }

  friend bool operator==(const Element& a, const Element& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.to_string(); }

  Element pow(int k) const {
    Element out = one(ring_);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

 private:
  void check_same(const Element& o) const {
    if (!same_ring(ring_, o.ring_)) throw DomainError("mixed-ring operands");
  }

  RingPtr ring_;
  Terms terms_;
};

enum class ArithOp { Add, Mul, Scale };

/// Sum, product, or scaling of a by the scalar element b.
inline Element arith(const Element& a, const Element& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Scale: {
      if (!same_ring(a.ring(), b.ring())) throw DomainError("mixed-ring operands");
      Integer c = 0;
      for (const auto& [m, v] : b.terms()) {
        if (a.ring()->degree(m) != 0 || m != a.ring()->algebra().unit()) {
          throw DomainError("scale operand is not a scalar");
        }
        c = v;
      }
      return a.scaled(c);
    }
  }
  throw DomainError("unknown arithmetic operation");
}

inline bool equal(const Element& a, const Element& b) { return a == b; }

inline std::vector<Monomial> basis_in_degree(const RingPtr& ring, int n) { return ring->basis_in_degree(n); }

/// Coordinates of a homogeneous element in a basis of normal monomials.
inline Vector coordinates(const Element& x, const std::vector<Monomial>& basis) {
  Vector out(basis.size(), 0);
  for (const auto& [m, c] : x.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw DomainError("element " + x.to_string() + " is not in the span of the basis");
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

inline Element from_coordinates(const RingPtr& ring, const std::vector<Monomial>& basis, const Vector& coords) {
  Terms t;
  for (std::size_t i = 0; i < basis.size(); ++i) ring->algebra().add_term(t, basis[i], coords[i]);
  return Element(ring, t);
}

/// Graded tensor product; colliding names on the right get a "_2" suffix.
/// Generators of a come first, so a-monomials dominate the order.
inline RingPtr tensor(const RingPtr& a, const RingPtr& b) {
  if (!(a->coefficients() == b->coefficients())) throw DomainError("tensor: coefficient mismatch");
  std::vector<Generator> gens = a->generators();
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.name);
  for (auto g : b->generators()) {
    while (names.count(g.name)) g.name += "_2";
    names.insert(g.name);
    gens.push_back(g);
  }
  std::size_t na = a->size(), nb = b->size();
  std::vector<Terms> rels;
  for (const auto& r : a->relations()) {
    Terms t;
    for (const auto& [m, c] : r) {
      Monomial e(m);
      e.resize(na + nb, 0);
      t.emplace(e, c);
    }
    rels.push_back(t);
  }
  for (const auto& r : b->relations()) {
    Terms t;
    for (const auto& [m, c] : r) {
      Monomial e(na, 0);
      e.insert(e.end(), m.begin(), m.end());
      t.emplace(e, c);
    }
    rels.push_back(t);
  }
  return make_ring(gens, rels, a->coefficients(), std::max(a->degree_bound(), b->degree_bound()));
}

/// Same presentation with every degree negated and generators renamed.
inline RingPtr negate_degrees(const RingPtr& ring, const std::vector<std::string>& names) {
  if (names.size() != ring->size()) throw DomainError("negate_degrees: wrong number of names");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < ring->size(); ++i) gens.push_back({names[i], -ring->generators()[i].degree});
  return make_ring(gens, ring->relations(), ring->coefficients(), ring->degree_bound());
}

/// Moves an element between two presentations sharing exponent layout.
inline Element transport(const Element& x, const RingPtr& target) {
  if (x.ring()->size() != target->size()) throw DomainError("transport: generator count mismatch");
  return Element(target, x.terms());
}

/// A degree-preserving ring homomorphism given on generators.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size()) throw DomainError("ring map: one image per generator required");
    if (!(source_->coefficients() == target_->coefficients())) throw DomainError("ring map: coefficient mismatch");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!same_ring(images_[i].ring(), target_)) throw DomainError("ring map: image in the wrong ring");
      auto d = images_[i].degree();
      if (!images_[i].is_zero() && (!d || *d != source_->generators()[i].degree)) {
        throw DomainError("ring map: image of " + source_->generators()[i].name + " has the wrong degree");
      }
    }
    for (const auto& r : source_->relations()) {
      if (!apply_terms(r).is_zero()) {
        throw DomainError("ring map does not respect relation " + source_->algebra().format(r));
      }
    }
  }

  /// Generator images named in the target, e.g. {"c", "c"} or {"t", "0"}.
  static RingMap from_strings(RingPtr source, RingPtr target, const std::vector<std::string>& images) {
    std::vector<Element> e;
    for (const auto& s : images) e.push_back(Element::parse(target, s));
    return RingMap(std::move(source), std::move(target), std::move(e));
  }

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& x) const {
    if (!same_ring(x.ring(), source_)) throw DomainError("ring map applied to an element of another ring");
    return apply_terms(x.terms());
  }

 private:
  Element apply_terms(const Terms& terms) const {
    Element out(target_);
    for (const auto& [m, c] : terms) {
      Element term = Element::scalar(target_, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) term *= images_[i];
      }
      out += term;
    }
    return out;
  }

  RingPtr source_;
  RingPtr target_;
  std::vector<Element> images_;
};

}  // namespace strops
