// HH_*(S^3 x S^1) and the three structure maps out of it.

#include <iostream>

#include "strops/string_product.hpp"

int main() {
  using namespace strops;
  auto model = trivial_model(sphere(3), circle());
  auto s = string_ring(model);
  for (const auto& [k, m] : s.window_basis()) std::cout << k << "  " << Element::monomial(s.ring, m) << "\n";
  auto sigma = Element::generator(s.ring, "sigma"), t = Element::generator(s.ring, "t");
  std::cout << "t * sigma = " << t * sigma << "\n";
  for (const auto& check : verify_structure_homs(model).checks) {
    std::cout << check.name << ": " << (check.passed ? "homomorphism" : "fails") << "\n";
  }
}
