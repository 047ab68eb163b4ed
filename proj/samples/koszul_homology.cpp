// Graded Koszul homology of (x^2, xy) against the regular sequence (x, y).

#include <iostream>

#include "hsos/groebner/ideal_ops.hpp"
#include "hsos/koszul/koszul.hpp"

int main() {
  hsos::RingContext ring(std::vector<std::string>{"x", "y"});
  for (const char* seq : {"[x, y]", "[x^2, x*y]"}) {
    auto kc = hsos::build_koszul(hsos::parse_polynomial_list(seq, ring));
    std::cout << seq << ": d o d = 0 " << (hsos::verify_dd_zero(kc) ? "yes" : "no") << ", H1 by degree:";
    for (unsigned d = 0; d <= 5; ++d) std::cout << " " << hsos::graded_homology_dim(kc, 1, d);
    std::cout << ", complete intersection: "
              << (hsos::is_complete_intersection(hsos::Ideal(ring, kc.inputs)) ? "yes" : "no") << "\n";
  }
}
