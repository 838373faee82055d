#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gspec/exactalg.hpp"

namespace gspec {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  // Throws ArgumentError unless a is a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const IntMatrix& a);

  std::size_t order() const noexcept { return n_; }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  void set_edge(std::size_t u, std::size_t v, bool present = true);
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

// Header-less graph6 with the single-byte order field (n <= 62).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// relabel(g, perm) has edge {perm[u], perm[v]} for each edge {u, v} of g.
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

IntMatrix adjacency(const Graph& g);
// Column k is A^k e for k = 0..n-1.
IntMatrix walk_matrix(const Graph& g);
bool is_controllable(const Graph& g);

struct GeneralizedSpectrum {
  IntPoly phi_G;
  IntPoly phi_Gbar;

  friend bool operator==(const GeneralizedSpectrum&, const GeneralizedSpectrum&) = default;
};

GeneralizedSpectrum generalized_spectrum(const Graph& g);

// Uniform sample from G(n, 1/2). The generator is xoshiro256** whose four
// state words are successive splitmix64 outputs from the initial value
// splitmix64(seed) ^ n. Edge {i, j} (i < j), visited in graph6 order
// (j = 1..n-1, i = 0..j-1), is present iff the top output bit is set.
Graph random_gnp_half(std::size_t n, std::uint64_t seed);

inline constexpr const char* kRngId = "xoshiro256starstar/splitmix64";

inline constexpr std::size_t kIsomorphismMaxOrder = 10;

// Exhaustive search with degree-partition pruning; n <= 10.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace gspec
