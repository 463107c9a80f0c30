// Compares the trivial and adjoint O(2) towers over Gr_{2,n} through Sq^1_t on HH_1.

#include <iostream>

#include "strops/pro_tower.hpp"

int main() {
  using namespace strops;
  auto cmp = o2_comparison(6);
  for (std::size_t i = 0; i < cmp.trivial.size(); ++i) {
    std::cout << "n = " << cmp.trivial[i].n << "  trivial: " << to_string(cmp.trivial[i].verdict)
              << "  adjoint: " << to_string(cmp.adjoint[i].verdict) << "\n";
  }
  std::cout << (cmp.inequivalent ? "inequivalent: " : "undecided: ") << cmp.statement << "\n";
}
