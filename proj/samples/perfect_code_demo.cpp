// Builds the binary Schmidt code in Sym_2(5) with minimum distance 3, checks
// that the rank-1 balls around its codewords tile the whole space, then
// prints covering densities across orders.

#include <iostream>

#include "symrank/codes.hpp"
#include "symrank/counting.hpp"
#include "symrank/linpoly.hpp"

int main() {
  using namespace symrank;

  const SymCode code = build_schmidt_code(2, 5, 3);
  const unsigned d = min_distance(code);
  const auto cert = verify_covering(code, counting::packing_radius(d));
  std::cout << "S(2,5,3): dimension " << code.dimension() << ", minimum distance " << d << "\n"
            << "  perfect: " << (is_perfect_given(code, d) ? "yes" : "no") << "\n"
            << "  ambient matrices: " << cert.ambient_size << ", uncovered: " << cert.uncovered
            << ", max multiplicity: " << cert.max_multiplicity << "\n";

  const auto punctured = build_punctured_code(2, 4, 3);
  std::cout << "punctured code in Sym_2(4): dimension " << punctured.code.dimension() << ", minimum distance "
            << punctured.measured_distance.value_or(0) << ", density "
            << to_fraction_string(covering_density_given(punctured.code, 3)) << "\n";

  std::cout << "\nMRD covering densities, q = 2\n";
  for (unsigned dd : {3u, 4u, 5u}) {
    for (unsigned m = dd; m <= 9; ++m) {
      std::cout << "  d = " << dd << ", m = " << m << ": " << to_fraction_string(counting::mrd_density(2, m, dd))
                << "\n";
    }
  }
  return 0;
}
