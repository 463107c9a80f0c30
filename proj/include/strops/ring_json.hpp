#pragma once

// Presentation documents:
//   {"coefficients": "Z" | "F2" | ...,
//    "generators": [{"name": "c", "degree": -2}, ...],
//    "relations": ["c^3", ...],
//    "degree_bound": 16}

#include <json.hpp>

#include <string>
#include <vector>

#include "strops/graded_algebra.hpp"

namespace strops {

using Json = nlohmann::ordered_json;

inline Json ring_to_json(const RingPresentation& ring) {
  Json gens = Json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json rels = Json::array();
  for (const auto& r : ring.relations()) rels.push_back(ring.algebra().format(r));
  return Json{{"coefficients", ring.coefficients().name()},
              {"generators", gens},
              {"relations", rels},
              {"degree_bound", ring.degree_bound()}};
}

inline RingPtr ring_from_json(const Json& doc) {
  try {
    auto coeffs = Coefficients::parse(doc.at("coefficients").get<std::string>());
    std::vector<Generator> gens;
    for (const auto& g : doc.at("generators")) {
      gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    }
    std::vector<std::string> rels;
    for (const auto& r : doc.at("relations")) rels.push_back(r.get<std::string>());
    int bound = doc.contains("degree_bound") ? doc.at("degree_bound").get<int>() : default_degree_bound();
    return make_ring(gens, rels, coeffs, bound);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ring document: ") + e.what());
  }
}

}  // namespace strops
