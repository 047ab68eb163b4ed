// Checks the four-variable example end to end and prints the transcript:
// I+ = <z4^2, z2 z3 + z1 z4, z2^2 + z2 z4>, g = z2^2, signature (3, 1) with n = 4.

#include <iostream>

#include "hsos/hsos.hpp"

int main() {
  hsos::SosReport rep = hsos::verify_four_variable_example();
  std::cout << rep.transcript();
  return rep.passed() ? 0 : 1;
}
