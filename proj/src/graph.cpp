#include "gspec/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "gspec/errors.hpp"
#include "mix.hpp"

namespace gspec {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {
  if (n == 0) throw ArgumentError("a graph needs at least one vertex");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (auto [u, v] : edges) set_edge(u, v);
}

Graph Graph::from_adjacency(const IntMatrix& a) {
  if (!a.square() || a.rows() == 0) throw DimensionError("adjacency matrix must be square and nonempty");
  Graph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw ArgumentError("adjacency matrix has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) throw ArgumentError("adjacency matrix is not symmetric");
      if (a(i, j) != 0 && a(i, j) != 1) throw ArgumentError("adjacency matrix entries must be 0 or 1");
      if (a(i, j) == 1) g.set_edge(i, j);
    }
  }
  return g;
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present) {
  if (u >= n_ || v >= n_) throw ArgumentError("vertex out of range");
  if (u == v) throw ArgumentError("self-loops are not allowed");
  adj_[u * n_ + v] = adj_[v * n_ + u] = present ? 1 : 0;
}

std::size_t Graph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count(adj_.begin() + v * n_, adj_.begin() + (v + 1) * n_, 1));
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

// graph6: one byte n + 63, then the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed six bits per byte (most significant first) plus 63.
Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError("graph6: orders above 62 are not supported", 0);
  if (head < 63 || head > 126) throw ParseError("graph6: invalid order byte", 0);
  const std::size_t n = static_cast<std::size_t>(head - 63);
  if (n == 0) throw ParseError("graph6: empty graph", 0);
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    const std::size_t at = std::min(text.size(), 1 + bytes);
    throw ParseError("graph6: expected " + std::to_string(1 + bytes) + " bytes for order " +
                         std::to_string(n) + ", got " + std::to_string(text.size()),
                     at);
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int c = static_cast<unsigned char>(text[1 + b]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", 1 + b);
    const int value = c - 63;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = ((value >> bit) & 1) != 0;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", 1 + b);
        continue;
      }
      if (!set) continue;
      // Locate column j with j(j-1)/2 <= k < j(j+1)/2.
      std::size_t j = 1;
      while ((j + 1) * j / 2 <= k) ++j;
      g.set_edge(k - j * (j - 1) / 2, j);
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw ArgumentError("graph6: orders above 62 are not supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) c.set_edge(i, j);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.order() + b.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a.has_edge(i, j)) u.set_edge(i, j);
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = i + 1; j < b.order(); ++j)
      if (b.has_edge(i, j)) u.set_edge(a.order() + i, a.order() + j);
  return u;
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw ArgumentError("relabel: permutation size mismatch");
  Graph r(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) r.set_edge(perm[i], perm[j]);
  return r;
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.has_edge(i, j)) a(i, j) = 1;
  return a;
}

IntMatrix walk_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix w(n, n);
  std::vector<Integer> v(n, Integer(1)), next(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) w(i, k) = v[i];
    if (k + 1 == n) break;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (g.has_edge(i, j)) next[i] += v[j];
    }
    std::swap(v, next);
  }
  return w;
}

bool is_controllable(const Graph& g) { return det(walk_matrix(g)) != 0; }

GeneralizedSpectrum generalized_spectrum(const Graph& g) {
  return {charpoly(adjacency(g)), charpoly(adjacency(complement(g)))};
}

namespace {

using detail::splitmix64;

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace

Graph random_gnp_half(std::size_t n, std::uint64_t seed) {
  std::uint64_t mix = seed;
  Xoshiro256StarStar rng(splitmix64(mix) ^ static_cast<std::uint64_t>(n));
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((rng.next() >> 63) != 0) g.set_edge(i, j);
  return g;
}

namespace {

bool extend(const Graph& g, const Graph& h, std::vector<std::size_t>& map, std::vector<bool>& used,
            std::size_t v) {
  const std::size_t n = g.order();
  if (v == n) return true;
  const std::size_t dv = g.degree(v);
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w] || h.degree(w) != dv) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(g, h, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
    throw ArgumentError("is_isomorphic: order above " + std::to_string(kIsomorphismMaxOrder));
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<std::size_t> dg, dh;
  for (std::size_t v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<std::size_t> map(g.order());
  std::vector<bool> used(g.order(), false);
  return extend(g, h, map, used, 0);
}

}  // namespace gspec
