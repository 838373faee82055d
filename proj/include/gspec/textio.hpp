#pragma once

// Text formats shared by the command-line tool.
//
//   matrix:          "r c" on the first line, then r lines of c integers
//   rational matrix: same layout, tokens are "p" or "p/q"
//   polynomial:      space-separated coefficients, ascending powers

#include <string>
#include <string_view>
#include <vector>

#include "gspec/certify.hpp"
#include "gspec/exactalg.hpp"
#include "gspec/graph.hpp"

namespace gspec {

IntMatrix parse_matrix(std::string_view text);
RationalMatrix parse_rational_matrix(std::string_view text);
IntPoly parse_poly(std::string_view text);

std::string format_matrix(const IntMatrix& m);
std::string format_rational_matrix(const RationalMatrix& m);
std::string format_poly(const IntPoly& f);
// Human readable, e.g. "x^2 - 1".
std::string pretty_poly(const IntPoly& f);

// Either one graph6 string per line or a single adjacency matrix in the
// matrix format (used above the graph6 order limit).
std::vector<Graph> parse_graphs(std::string_view text);

}  // namespace gspec
