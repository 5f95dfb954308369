// Plot-ready CSV of x -> capacity of E(1,x) into B^4 on [1, 8].
#include <iostream>

#include "sympack/staircase.hpp"

int main() {
  using namespace sympack;
  auto table = sample_staircase_partial(1, 8, Rational(1, 8), 30);
  write_staircase_csv(std::cout, table);
  return table.complete() ? 0 : 2;
}
