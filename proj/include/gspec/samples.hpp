#pragma once

// Reference instances with independently published invariants, used by the
// `samples` command and the golden tests.

#include "gspec/certify.hpp"
#include "gspec/exactalg.hpp"
#include "gspec/graph.hpp"

namespace gspec::samples {

// 8x8 symmetric matrix whose discriminant is odd and square-free.
IntMatrix squarefree_disc_matrix();

// 10x10 symmetric matrix with 3^2 dividing its discriminant, together with a
// level-3 rational orthogonal matrix conjugating it to another integral
// matrix.
IntMatrix square_disc_matrix();
RationalMatrix square_disc_conjugator();
IntMatrix square_disc_conjugate();

// 12-vertex graph whose reduced walk determinant has the square factor 13^2
// but whose gcd with the discriminant is 5.
Graph gcd_certified_graph();

}  // namespace gspec::samples
