// The BS^1 tower: levels HH_*(CP^n x S^1), the maps between them, and the
// limit in degrees >= -8.

#include <iostream>

#include "strops/pro_tower.hpp"

int main() {
  using namespace strops;
  auto tower = s1_tower(6);
  for (const auto& level : tower.levels) {
    std::cout << "level " << level.n << ":";
    for (int d = level.range.hi; d >= level.range.lo; --d) std::cout << " " << level.ring->basis_in_degree(d).size();
    std::cout << "   (dims, degree " << level.range.hi << " down to " << level.range.lo << ")\n";
  }
  for (const auto& m : tower.maps) {
    std::cout << m.from << " -> " << m.to << " is an isomorphism in degrees >= " << *m.iso_from_degree << "\n";
  }
  auto lim = tower_limit(tower, {-8, 1});
  auto c = Element::generator(lim.ring, "c"), t = Element::generator(lim.ring, "t");
  std::cout << "in the limit: (c t) * c^2 = " << lim.multiply(c * t, c.pow(2)) << ", c^2 * c^3 = " << lim.multiply(c.pow(2), c.pow(3))
            << " (below the window)\n";
}
