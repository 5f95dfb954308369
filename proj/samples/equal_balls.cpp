// Fraction of B^4 filled by k equal balls, k = 1..9, with certification status.
#include <iostream>

#include "sympack/packing.hpp"

int main() {
  using namespace sympack;
  for (std::int64_t k = 1; k <= 9; ++k) {
    auto r = equal_ball_fraction(k, k == 9 ? 60 : 30);
    std::cout << "k=" << k << "  ";
    if (r.exact()) std::cout << r.upper.str();
    else std::cout << "[" << r.lower.str() << ", " << r.upper.str() << "]";
    std::cout << '\n';
  }
}
