#pragma once

// Command-line front end. run_cli parses, dispatches, and writes to the given
// streams so the tool and its tests share one code path.
//
// Exit codes: 0 success, 1 a verification reported a failure, 2 domain error,
// 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strops/strops.hpp"

namespace strops::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

struct Command {
  std::string verb;
  std::string space, base, fiber, group;
  std::string kind = "cohomology";
  std::string coeffs;
  std::string window;
  std::string format = "table";
  std::string cls;
  int i = 0;
  int tmax = 0;
  int levels = 0;
  std::optional<int> truncation;
  bool twisted = false;
  bool limit = false;
};

namespace detail {

inline std::string signed_degree(int d) {
  std::ostringstream s;
  s << std::showpos << d;
  return s.str();
}

inline std::optional<Coefficients> coeffs_of(const Command& c) {
  if (c.coeffs.empty()) return std::nullopt;
  return Coefficients::parse(c.coeffs);
}

inline std::string mono(const RingPtr& ring, const Monomial& m) { return Element::monomial(ring, m).to_string(); }

inline Json basis_json(const RingPtr& ring, const std::vector<Monomial>& basis) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(mono(ring, m));
  return out;
}

/// Degree entries for a ring, listing degrees hi..lo; unshifted = shifted + shift.
struct DegreeRows {
  std::vector<int> degrees;
  std::vector<std::vector<Monomial>> bases;
};

inline DegreeRows collect(const RingPtr& ring, int lo, int hi) {
  DegreeRows rows;
  for (int d = hi; d >= lo; --d) {
    auto b = ring->basis_in_degree(d);
    if (b.empty()) continue;
    rows.degrees.push_back(d);
    rows.bases.push_back(std::move(b));
  }
  return rows;
}

inline std::vector<Monomial> flatten(const DegreeRows& rows) {
  std::vector<Monomial> out;
  for (const auto& b : rows.bases) out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Products of all basis pairs (a, b) with a listed before or equal to b,
/// optionally truncated to a window.
inline Json products_json(const RingPtr& ring, const std::vector<Monomial>& basis,
                          std::optional<DegreeWindow> window = std::nullopt) {
  Json out = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      Element p = Element::monomial(ring, basis[i]) * Element::monomial(ring, basis[j]);
      if (window) {
        Element kept(ring);
        for (int d = window->lo; d <= window->hi; ++d) kept += p.component(d);
        p = kept;
      }
      out.push_back({{"a", mono(ring, basis[i])}, {"b", mono(ring, basis[j])}, {"result", p.to_string()}});
    }
  }
  return out;
}

inline void print_products(std::ostream& out, const Json& products) {
  out << "products:\n";
  for (const auto& p : products) {
    out << "  " << p["a"].get<std::string>() << " * " << p["b"].get<std::string>() << " = "
        << p["result"].get<std::string>() << "\n";
  }
}

inline void print_presentation(std::ostream& out, const RingPtr& ring) {
  out << "coefficients: " << ring->coefficients().name() << "\n";
  out << "generators:";
  for (const auto& g : ring->generators()) out << " " << g.name << "(" << signed_degree(g.degree) << ")";
  out << "\nrelations:";
  if (ring->relations().empty()) out << " none";
  for (const auto& r : ring->relations()) out << " " << ring->algebra().format(r);
  out << "\n";
}

/// Rows "shifted unshifted dim basis" for a shifted ring (shift = d).
inline void print_rows(std::ostream& out, const RingPtr& ring, const DegreeRows& rows, std::optional<int> shift) {
  if (shift) out << std::setw(10) << "HH-degree" << std::setw(10) << "H-degree";
  else out << std::setw(10) << "degree";
  out << std::setw(6) << "dim" << "  basis\n";
  for (std::size_t k = 0; k < rows.degrees.size(); ++k) {
    int d = rows.degrees[k];
    if (shift) out << std::setw(10) << signed_degree(d) << std::setw(10) << d + *shift;
    else out << std::setw(10) << d;
    out << std::setw(6) << rows.bases[k].size() << " ";
    for (const auto& m : rows.bases[k]) out << " " << mono(ring, m);
    out << "\n";
  }
}

inline Json rows_json(const RingPtr& ring, const DegreeRows& rows, std::optional<int> shift) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < rows.degrees.size(); ++k) {
    Json e{{"degree", rows.degrees[k]}};
    if (shift) e["unshifted_degree"] = rows.degrees[k] + *shift;
    e["dim"] = rows.bases[k].size();
    e["basis"] = basis_json(ring, rows.bases[k]);
    entries.push_back(e);
  }
  return entries;
}

inline DegreeWindow window_or(const Command& c, DegreeWindow fallback) {
  return c.window.empty() ? fallback : DegreeWindow::parse(c.window);
}

// ---------------------------------------------------------------- verbs

inline int do_ring(const Command& c, std::ostream& out) {
  auto m = standard_space(c.space, coeffs_of(c));
  Json doc{{"space", m->name}, {"kind", c.kind}, {"dim", m->dim}};
  if (c.kind == "cohomology") {
    auto w = window_or(c, {0, m->dim});
    auto rows = collect(m->cohomology, w.lo, w.hi);
    auto products = products_json(m->cohomology, flatten(rows), DegreeWindow{0, m->dim});
    if (c.format == "json") {
      doc["presentation"] = ring_to_json(*m->cohomology);
      doc["entries"] = rows_json(m->cohomology, rows, std::nullopt);
      doc["products"] = products;
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    out << "H^*(" << m->name << "), dim " << m->dim << "\n";
    print_presentation(out, m->cohomology);
    print_rows(out, m->cohomology, rows, std::nullopt);
    print_products(out, products);
    return kExitOk;
  }
  if (c.kind == "intersection") {
    auto r = intersection_ring(m);
    auto w = window_or(c, {-m->dim, 0});
    auto rows = collect(r.ring, w.lo, w.hi);
    auto products = products_json(r.ring, flatten(rows));
    if (c.format == "json") {
      doc["shift"] = m->dim;
      doc["presentation"] = ring_to_json(*r.ring);
      doc["entries"] = rows_json(r.ring, rows, m->dim);
      doc["products"] = products;
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    out << "HH_*(" << m->name << ") = H_{*+" << m->dim << "}, intersection product\n";
    print_presentation(out, r.ring);
    print_rows(out, r.ring, rows, m->dim);
    print_products(out, products);
    return kExitOk;
  }
  throw DomainError("unknown ring kind '" + c.kind + "' (cohomology | intersection)");
}

inline int do_sq(const Command& c, std::ostream& out) {
  auto m = standard_space(c.space, coeffs_of(c).value_or(Coefficients::prime_field(2)));
  const auto& action = action_of(m);
  Element x = Element::parse(m->cohomology, c.cls);
  Element y = c.twisted ? twisted_sq(c.i, x, minus_tangent(m), action) : sq(c.i, x, action);
  std::string op = std::string(c.twisted ? "Sq_t^" : "Sq^") + std::to_string(c.i);
  if (c.format == "json") {
    Json doc{{"space", m->name}, {"operation", op}, {"twisted", c.twisted}, {"class", x.to_string()}, {"result", y.to_string()}};
    if (auto d = y.degree()) doc["degree"] = *d;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << op << "(" << x.to_string() << ") = " << y.to_string() << "   in H^*(" << m->name << "; F2)\n";
  return kExitOk;
}

inline FiberwiseMonoidModel model_of(const Command& c) {
  auto base = standard_space(c.base, coeffs_of(c));
  auto fiber = standard_fiber(c.fiber, base->coefficients(), c.truncation);
  return trivial_model(base, fiber);
}

inline int do_string_ring(const Command& c, std::ostream& out) {
  auto model = model_of(c);
  auto s = string_ring(model, c.window.empty() ? std::nullopt : std::optional(DegreeWindow::parse(c.window)));
  int d = model.base->dim;
  auto rows = collect(s.ring, s.window.lo, s.window.hi);
  auto products = products_json(s.ring, flatten(rows), s.window);
  if (c.format == "json") {
    Json doc{{"base", model.base->name},
             {"fiber", model.fiber.name},
             {"window", {s.window.lo, s.window.hi}},
             {"shift", d},
             {"presentation", ring_to_json(*s.ring)},
             {"entries", rows_json(s.ring, rows, d)},
             {"products", products}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "HH_*(" << model.base->name << " x " << model.fiber.name << ") = HH_*(" << model.base->name << ") (x) H_*("
      << model.fiber.name << "), window " << s.window.lo << ":" << s.window.hi << "\n";
  print_presentation(out, s.ring);
  print_rows(out, s.ring, rows, d);
  print_products(out, products);
  return kExitOk;
}

inline int do_e2(const Command& c, std::ostream& out) {
  auto base = standard_space(c.base, coeffs_of(c));
  auto fiber = standard_fiber(c.fiber, base->coefficients(), c.truncation);
  auto page = cjy_e2_page(base, fiber, c.tmax);
  std::vector<Monomial> all;
  Json entries = Json::array();
  for (const auto& [key, basis] : page.entries) {
    all.insert(all.end(), basis.begin(), basis.end());
    entries.push_back({{"bidegree", {key.first, key.second}},
                       {"total", key.first + key.second},
                       {"dim", basis.size()},
                       {"basis", basis_json(page.ring, basis)}});
  }
  auto products = products_json(page.ring, all);
  if (c.format == "json") {
    Json doc{{"base", base->name}, {"fiber", fiber.name}, {"tmax", c.tmax}, {"entries", entries}, {"products", products}};
    if (page.certificate) doc["certificate"] = *page.certificate;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "E2_{-m,n} = H^m(" << base->name << "; H_n(" << fiber.name << ")), total degree <= " << c.tmax << "\n";
  out << std::setw(12) << "(-m,n)" << std::setw(7) << "total" << std::setw(6) << "dim" << "  basis\n";
  for (const auto& e : entries) {
    std::string bd = "(" + std::to_string(e["bidegree"][0].get<int>()) + "," + std::to_string(e["bidegree"][1].get<int>()) + ")";
    out << std::setw(12) << bd << std::setw(7) << signed_degree(e["total"].get<int>()) << std::setw(6) << e["dim"].get<std::size_t>() << " ";
    for (const auto& b : e["basis"]) out << " " << b.get<std::string>();
    out << "\n";
  }
  print_products(out, products);
  out << "certificate: " << page.certificate.value_or("none (collapse not forced by degrees)") << "\n";
  return kExitOk;
}

inline std::string matrix_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) s += "; ";
    for (std::size_t k = 0; k < m[r].size(); ++k) s += (k ? " " : "") + m[r][k].str();
  }
  return s + "]";
}

inline Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(static_cast<long long>(v));
    out.push_back(r);
  }
  return out;
}

inline int do_tower_s1(const Command& c, std::ostream& out) {
  auto tower = s1_tower(c.levels);
  Json levels = Json::array(), maps = Json::array();
  for (const auto& l : tower.levels) {
    auto rows = collect(l.ring, l.range.lo, l.range.hi);
    levels.push_back({{"n", l.n}, {"ring", ring_to_json(*l.ring)}, {"entries", rows_json(l.ring, rows, 2 * l.n)}});
  }
  for (const auto& m : tower.maps) {
    Json images = Json::object();
    for (std::size_t g = 0; g < m.map.source()->size(); ++g) {
      images[m.map.source()->generators()[g].name] = m.map.images()[g].to_string();
    }
    Json j{{"from", m.from}, {"to", m.to}, {"images", images}, {"homomorphism_checked", m.homomorphism_checked}};
    if (m.iso_from_degree) j["iso_from_degree"] = *m.iso_from_degree;
    maps.push_back(j);
  }
  std::optional<LimitRing> lim;
  if (c.limit) {
    // Default: the degrees where the last map is already an isomorphism.
    const auto& top = tower.levels.back();
    DegreeWindow stable = top.range;
    if (!tower.maps.empty() && tower.maps.back().iso_from_degree) stable.lo = *tower.maps.back().iso_from_degree;
    lim = tower_limit(tower, window_or(c, stable));
  }
  if (c.format == "json") {
    Json doc{{"group", "s1"}, {"levels", levels}, {"maps", maps}};
    if (lim) {
      auto rows = collect(lim->ring, lim->window.lo, lim->window.hi);
      doc["limit"] = {{"window", {lim->window.lo, lim->window.hi}},
                      {"entries", rows_json(lim->ring, rows, std::nullopt)},
                      {"products", products_json(lim->ring, flatten(rows), lim->window)}};
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "string topology tower of BS^1: levels HH_*(CP^n x S^1), n = 1.." << c.levels << "\n";
  for (const auto& l : tower.levels) {
    out << "\nlevel " << l.n << "\n";
    print_presentation(out, l.ring);
    print_rows(out, l.ring, collect(l.ring, l.range.lo, l.range.hi), 2 * l.n);
  }
  out << "\nmaps\n";
  for (const auto& m : tower.maps) {
    out << "  level " << m.from << " -> " << m.to << ":";
    for (std::size_t g = 0; g < m.map.source()->size(); ++g) {
      out << " " << m.map.source()->generators()[g].name << " -> " << m.map.images()[g].to_string() << ";";
    }
    if (m.iso_from_degree) out << " isomorphism in degrees >= " << *m.iso_from_degree;
    out << "\n";
  }
  if (lim) {
    out << "\nlimit on window " << lim->window.lo << ":" << lim->window.hi << "\n";
    auto rows = collect(lim->ring, lim->window.lo, lim->window.hi);
    print_rows(out, lim->ring, rows, std::nullopt);
    print_products(out, products_json(lim->ring, flatten(rows), lim->window));
  }
  return kExitOk;
}

inline int do_tower_o2(const Command& c, std::ostream& out) {
  if (c.limit) throw DomainError("the O(2) towers have no ring limit here; drop --limit");
  auto cmp = o2_comparison(c.levels);
  Json levels = Json::array();
  for (std::size_t k = 0; k < cmp.trivial.size(); ++k) {
    const auto& t = cmp.trivial[k];
    const auto& a = cmp.adjoint[k];
    Json table = Json::array();
    for (std::size_t j = 0; j < t.h1_basis.size(); ++j) {
      Json coords = Json::array();
      for (const auto& v : t.sq1t[j].coords) coords.push_back(static_cast<long long>(v));
      table.push_back({{"class", mono(t.string.ring, t.h1_basis[j])}, {"image_coordinates", coords}});
    }
    levels.push_back({{"n", t.n},
                      {"ring", ring_to_json(*t.string.ring)},
                      {"h1_dim", t.h1_basis.size()},
                      {"sq1t_table", table},
                      {"trivial_sq1t", to_string(t.verdict)},
                      {"adjoint", {{"h1_dim", a.h1_dim},
                                   {"components_orientable", a.facts.components_orientable},
                                   {"sq1t", to_string(a.verdict)},
                                   {"reason", a.reason}}}});
  }
  Json maps = Json::array();
  for (std::size_t k = 0; k < cmp.trivial_h1_maps.size(); ++k) {
    maps.push_back({{"from", cmp.trivial[k + 1].n},
                    {"to", cmp.trivial[k].n},
                    {"trivial_h1", matrix_json(cmp.trivial_h1_maps[k])},
                    {"adjoint_h1", matrix_json(cmp.adjoint_h1_maps[k])},
                    {"isomorphisms", cmp.trivial_maps_iso[k] && cmp.adjoint_maps_iso[k]}});
  }
  Json cert{{"inequivalent", cmp.inequivalent},
            {"invariant", cmp.invariant},
            {"witness_levels", cmp.witness_levels},
            {"statement", cmp.statement}};
  if (c.format == "json") {
    out << Json{{"group", "o2"}, {"levels", levels}, {"maps", maps}, {"certificate", cert}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "string topology towers of BO(2) over Gr_{2,n}, n = 3.." << c.levels << ", F2\n";
  out << std::setw(4) << "n" << std::setw(8) << "dim HH1" << std::setw(16) << "Sq1_t trivial" << std::setw(16)
      << "Sq1_t adjoint" << "  reason\n";
  for (const auto& l : levels) {
    out << std::setw(4) << l["n"].get<int>() << std::setw(8) << l["h1_dim"].get<std::size_t>() << std::setw(16)
        << l["trivial_sq1t"].get<std::string>() << std::setw(16) << l["adjoint"]["sq1t"].get<std::string>() << "  "
        << l["adjoint"]["reason"].get<std::string>() << "\n";
  }
  out << "HH_1 maps\n";
  for (std::size_t k = 0; k < cmp.trivial_h1_maps.size(); ++k) {
    out << "  level " << cmp.trivial[k + 1].n << " -> " << cmp.trivial[k].n << ": trivial "
        << matrix_string(cmp.trivial_h1_maps[k]) << ", adjoint " << matrix_string(cmp.adjoint_h1_maps[k])
        << (cmp.trivial_maps_iso[k] && cmp.adjoint_maps_iso[k] ? "  (isomorphisms)" : "  (NOT isomorphisms)") << "\n";
  }
  out << "certificate: " << (cmp.inequivalent ? "towers inequivalent" : "no verdict") << "\n  invariant: " << cmp.invariant
      << "\n  " << cmp.statement << "\n";
  return kExitOk;
}

inline int do_tower(const Command& c, std::ostream& out) {
  if (c.group == "s1") return do_tower_s1(c, out);
  if (c.group == "o2") return do_tower_o2(c, out);
  throw DomainError("unknown group '" + c.group + "' (s1 | o2)");
}

/// "PD(poly)" names a cohomology class; anything else is read in HH_*.
inline Element parse_homology_class(const QContext& ctx, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.size() > 4 && t.rfind("PD(", 0) == 0 && t.back() == ')') {
    return ctx.intersection.from_cohomology(Element::parse(ctx.manifold->cohomology, t.substr(3, t.size() - 4)));
  }
  return Element::parse(ctx.intersection.ring, t);
}

inline int do_qop(const Command& c, std::ostream& out) {
  auto m = standard_space(c.space, coeffs_of(c).value_or(Coefficients::prime_field(2)));
  auto ctx = q_context(m);
  Element x = parse_homology_class(ctx, c.cls);
  Element y = q_op(c.i, x, ctx);
  if (c.format == "json") {
    Json doc{{"space", m->name}, {"i", c.i}, {"class", x.to_string()}, {"result", y.to_string()}};
    if (auto d = x.degree()) {
      doc["q"] = -*d;
      doc["result_degree"] = 2 * *d + c.i;
      doc["result_unshifted_degree"] = 2 * *d + c.i + m->dim;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "Q_" << c.i << "(" << x.to_string() << ") = " << y.to_string();
  if (auto d = x.degree()) out << "   in HH_{" << signed_degree(2 * *d + c.i) << "}(" << m->name << "; F2)";
  out << "\n";
  return kExitOk;
}

inline int do_verify(const Command& c, std::ostream& out) {
  auto model = model_of(c);
  auto report = verify_structure_homs(model, c.window.empty() ? std::nullopt : std::optional(DegreeWindow::parse(c.window)));
  if (c.format == "json") {
    Json checks = Json::array();
    for (const auto& k : report.checks) {
      checks.push_back({{"name", k.name}, {"passed", k.passed}, {"pairs", k.pairs}, {"counterexample", k.counterexample}});
    }
    out << Json{{"base", model.base->name}, {"fiber", model.fiber.name}, {"checks", checks}}.dump(2) << "\n";
  } else {
    out << "structure homomorphisms for " << model.base->name << " x " << model.fiber.name << "\n";
    for (const auto& k : report.checks) {
      out << "  " << (k.passed ? "PASS" : "FAIL") << "  " << k.name << "  (" << k.pairs << " basis pairs)";
      if (!k.passed) out << "  counterexample: " << k.counterexample;
      out << "\n";
    }
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

// CLI11 reads "-6:2" as a flag; glue negative option values to their option.
inline std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if ((a == "--window" || a == "--class") && k + 1 < argc && argv[k + 1][0] == '-') {
      args.push_back(a + "=" + argv[++k]);
    } else {
      args.push_back(a);
    }
  }
  return args;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("STROPS_DEGREE_BOUND")) {
    try {
      int bound = std::stoi(env);
      if (bound < 1) throw std::invalid_argument("bound");
      degree_bound_setting().store(bound);
    } catch (const std::exception&) {
      err << "error: STROPS_DEGREE_BOUND must be a positive integer\n";
      return kExitUsage;
    }
  }

  Command cmd;
  CLI::App app{"strops: string topology computations in presented graded rings"};
  app.name("strops");
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cmd.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_coeffs = [&](CLI::App* s) { s->add_option("--coeffs", cmd.coeffs, "coefficient ring (Z, F2, F3, ...)"); };

  auto* ring = app.add_subcommand("ring", "cohomology or intersection ring of a space");
  ring->add_option("--space", cmd.space, "space id (cp2, rp3, s2, gr2,5, cp1xs1, ...)")->required();
  ring->add_option("--kind", cmd.kind, "cohomology or intersection")->check(CLI::IsMember({"cohomology", "intersection"}));
  ring->add_option("--window", cmd.window, "degree window a:b");
  add_coeffs(ring);
  add_format(ring);

  auto* sqc = app.add_subcommand("sq", "Steenrod square of a cohomology class");
  sqc->add_option("--space", cmd.space, "space id")->required();
  sqc->add_option("--i", cmd.i, "square index")->required()->check(CLI::NonNegativeNumber);
  sqc->add_option("--class", cmd.cls, "polynomial in the cohomology generators")->required();
  sqc->add_flag("--twisted", cmd.twisted, "use Sq_t, twisted by -TM");
  add_coeffs(sqc);
  add_format(sqc);

  auto* sr = app.add_subcommand("string-ring", "HH_*(M x F) for a trivial bundle");
  sr->add_option("--base", cmd.base, "base space id")->required();
  sr->add_option("--fiber", cmd.fiber, "fiber id (s1, o2, point, omegaS<n>)")->required();
  sr->add_option("--truncation", cmd.truncation, "truncation for infinite fibers");
  sr->add_option("--window", cmd.window, "degree window a:b");
  add_coeffs(sr);
  add_format(sr);

  auto* e2 = app.add_subcommand("e2", "E2 page H^*(M; H_*(F)) with its product");
  e2->add_option("--base", cmd.base, "base space id")->required();
  e2->add_option("--fiber", cmd.fiber, "fiber id")->required();
  e2->add_option("--tmax", cmd.tmax, "largest total degree")->required();
  e2->add_option("--truncation", cmd.truncation, "truncation for infinite fibers");
  add_coeffs(e2);
  add_format(e2);

  auto* tw = app.add_subcommand("tower", "string topology towers of BS^1 and BO(2)");
  tw->add_option("--group", cmd.group, "s1 or o2")->required()->check(CLI::IsMember({"s1", "o2"}));
  tw->add_option("--levels", cmd.levels, "top level N")->required()->check(CLI::PositiveNumber);
  tw->add_flag("--limit", cmd.limit, "print the degreewise limit");
  tw->add_option("--window", cmd.window, "degree window for the limit");
  add_format(tw);

  auto* q = app.add_subcommand("qop", "Q_i = PD(Sq^{q-i}) on HH_*(M; F2)");
  q->add_option("--space", cmd.space, "space id")->required();
  q->add_option("--i", cmd.i, "operation index")->required()->check(CLI::NonNegativeNumber);
  q->add_option("--class", cmd.cls, "class in HH_*, or PD(cohomology polynomial)")->required();
  add_coeffs(q);
  add_format(q);

  auto* ver = app.add_subcommand("verify", "check that p_*, s_*, c are ring homomorphisms");
  ver->add_option("--base", cmd.base, "base space id")->required();
  ver->add_option("--fiber", cmd.fiber, "fiber id")->required();
  ver->add_option("--truncation", cmd.truncation, "truncation for infinite fibers");
  ver->add_option("--window", cmd.window, "degree window a:b");
  add_coeffs(ver);
  add_format(ver);

  auto args = detail::normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* s : app.get_subcommands()) cmd.verb = s->get_name();
  try {
    if (cmd.verb == "ring") return detail::do_ring(cmd, out);
    if (cmd.verb == "sq") return detail::do_sq(cmd, out);
    if (cmd.verb == "string-ring") return detail::do_string_ring(cmd, out);
    if (cmd.verb == "e2") return detail::do_e2(cmd, out);
    if (cmd.verb == "tower") return detail::do_tower(cmd, out);
    if (cmd.verb == "qop") return detail::do_qop(cmd, out);
    if (cmd.verb == "verify") return detail::do_verify(cmd, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed argument (" << e.what() << ")\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: argument out of range (" << e.what() << ")\n";
    return kExitUsage;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace strops::cli
