#pragma once

// Vertex–facet incidence generators for the benchmark families and the
// worked examples used throughout the tests.
//
// Families and parameters (atoms are vertices, coatoms are facets):
//   simplex d            d+1 vertices, all d-subsets
//   hypercube d          2^d vertices, 2d facets (coordinate i fixed to 0/1)
//   cross_polytope d     2d vertices (antipodal pairs), 2^d sign-choice facets
//   cyclic d n           n vertices on the moment curve, Gale-evenness facets
//   rp2                  the 6-vertex, 10-triangle projective plane
//   uniform_matroid r n  hyperplanes of U_{r,n}: all (r-1)-subsets
//   nongraded_example    4 coatoms whose 9-element lattice has no rank function
//   tight_span_example   3 bounded faces of an unbounded subdivision
//   complex_example      three quadrant cells sharing the origin (a complex)

#include "facelatt/lattice_input.hpp"

#include <string>
#include <vector>

namespace facelatt {

LatticeInput gen_simplex(int d);
LatticeInput gen_hypercube(int d);
LatticeInput gen_cross_polytope(int d);
LatticeInput gen_cyclic(int d, int n);
LatticeInput gen_rp2();
LatticeInput gen_uniform_matroid(int r, int n);
LatticeInput gen_nongraded_example();
LatticeInput gen_tight_span_example();
std::vector<LatticeInput> gen_complex_example();

/// Dispatch by family name; complex_example yields three cells, everything
/// else one input. Unknown family or bad parameter count -> InputError.
std::vector<LatticeInput> generate(const std::string& family, const std::vector<int>& params);

/// All family names accepted by generate(), for CLI help and tests.
std::vector<std::string> generator_families();

} // namespace facelatt
