#include "gspec/samples.hpp"

#include "gspec/textio.hpp"

namespace gspec::samples {

IntMatrix squarefree_disc_matrix() {
  return {{1, 0, 1, -2, -1, 1, -1, -2},   {0, -1, -1, 0, 0, -1, 0, 1},
          {1, -1, 0, 1, 0, -2, -2, 1},    {-2, 0, 1, 0, -1, 0, -2, 0},
          {-1, 0, 0, -1, 3, -1, 1, -2},   {1, -1, -2, 0, -1, 0, -1, -2},
          {-1, 0, -2, -2, 1, -1, 0, 0},   {-2, 1, 1, 0, -2, -2, 0, 0}};
}

IntMatrix square_disc_matrix() {
  return {{1, 1, -1, 1, 0, -1, -1, 1, 0, 1},  {1, 0, 1, 0, 0, 0, 0, 1, 1, -1},
          {-1, 1, -1, 0, 1, -1, 0, -1, 0, 0}, {1, 0, 0, 0, 1, 0, 0, 1, 0, 1},
          {0, 0, 1, 1, 1, 0, 1, 0, 0, 0},     {-1, 0, -1, 0, 0, 0, 1, 0, 0, -1},
          {-1, 0, 0, 0, 1, 1, 0, 1, -1, -1},  {1, 1, -1, 1, 0, 0, 1, 0, 1, 1},
          {0, 1, 0, 0, 0, 0, -1, 1, 0, -1},   {1, -1, 0, 1, 0, -1, -1, 1, -1, 0}};
}

RationalMatrix square_disc_conjugator() {
  return parse_rational_matrix(
      "10 10\n"
      "0 0 0 0 0 0 1 0 0 0\n"
      "0 0 0 0 0 0 0 1 0 0\n"
      "0 0 0 0 0 0 0 0 1 0\n"
      "2/3 -1/3 -1/3 1/3 1/3 1/3 0 0 0 0\n"
      "0 0 0 0 0 0 0 0 0 1\n"
      "1/3 1/3 1/3 2/3 -1/3 -1/3 0 0 0 0\n"
      "1/3 1/3 1/3 -1/3 2/3 -1/3 0 0 0 0\n"
      "-1/3 2/3 -1/3 1/3 1/3 1/3 0 0 0 0\n"
      "-1/3 -1/3 2/3 1/3 1/3 1/3 0 0 0 0\n"
      "1/3 1/3 1/3 -1/3 -1/3 2/3 0 0 0 0\n");
}

IntMatrix square_disc_conjugate() {
  return {{0, 1, -1, 0, 0, 0, 0, -1, 0, 1},  {1, 0, 0, 0, 1, 0, 0, 0, -1, 0},
          {-1, 0, -2, 1, 0, -1, -1, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 0, 1, -1, 0},
          {0, 1, 0, 1, 0, 0, 0, 1, 0, 1},     {0, 0, -1, 0, 0, 2, 2, 0, 0, 0},
          {0, 0, -1, 0, 0, 2, 1, 1, -1, 0},   {-1, 0, 0, 1, 1, 0, 1, 0, 1, 0},
          {0, -1, 0, -1, 0, 0, -1, 1, -1, 1}, {1, 0, 0, 0, 1, 0, 0, 0, 1, 1}};
}

Graph gcd_certified_graph() {
  return Graph::from_adjacency(IntMatrix{{0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0},
                                         {0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1},
                                         {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1},
                                         {1, 1, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1},
                                         {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1},
                                         {1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0},
                                         {1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0},
                                         {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
                                         {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
                                         {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 0},
                                         {1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0},
                                         {0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0}});
}

}  // namespace gspec::samples
