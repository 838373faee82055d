#include <doctest.h>

#include <numeric>
#include <set>

#include "gspec/errors.hpp"
#include "gspec/oracle.hpp"
#include "oracles.hpp"

using namespace gspec;

namespace {

std::uint64_t mask_of(const Graph& g) {
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j, ++bit)
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
  return mask;
}

std::multiset<std::size_t> bucket_sizes(const SpectrumBuckets& b) {
  std::multiset<std::size_t> out;
  for (const auto& [key, masks] : b) out.insert(masks.size());
  return out;
}

}  // namespace

TEST_CASE("enumerate_graphs examples") {
  for (auto [n, expected] : {std::pair<std::size_t, std::uint64_t>{1, 1}, {3, 8}, {4, 64}}) {
    std::uint64_t count = 0, previous = 0;
    std::set<std::string> seen;
    enumerate_graphs(n, [&](std::uint64_t mask, const Graph& g) {
      if (count > 0) CHECK(mask == previous + 1);
      previous = mask;
      ++count;
      seen.insert(emit_graph6(g));
      CHECK(mask_of(g) == mask);
    });
    CHECK(count == expected);
    CHECK(seen.size() == expected);
  }
  CHECK_THROWS_AS(enumerate_graphs(8, [](std::uint64_t, const Graph&) {}), ArgumentError);
  CHECK_THROWS_AS(enumerate_graphs(0, [](std::uint64_t, const Graph&) {}), ArgumentError);
}

TEST_CASE("find_gspec_mates examples") {
  CHECK(find_gspec_mates(3).empty());
  // Pinned from the first exhaustive run.
  CHECK(find_gspec_mates(4).empty());
  CHECK(find_gspec_mates(5).empty());
}

TEST_CASE("mate classes are non-isomorphic and share spectra") {
  // Plain cospectral pairs exist from five vertices; the complement spectrum separates them.
  const Graph c4k1 = disjoint_union(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), Graph(1));
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(spectrum_key(c4k1).phi_g == spectrum_key(star).phi_g);
  CHECK_FALSE(spectrum_key(c4k1) == spectrum_key(star));

  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& cls : find_gspec_mates(n)) {
      CHECK(cls.members.size() >= 2);
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        CHECK(spectrum_key(cls.members[i]) == cls.key);
        for (std::size_t j = i + 1; j < cls.members.size(); ++j)
          CHECK_FALSE(oracle::isomorphic_by_permutations(cls.members[i], cls.members[j]));
      }
    }
}

TEST_CASE("buckets cover every labeled graph exactly once") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto buckets = bucket_by_spectrum(n);
    std::uint64_t total = 0;
    std::set<std::uint64_t> masks;
    for (const auto& [key, m] : buckets) {
      total += m.size();
      masks.insert(m.begin(), m.end());
      CHECK(std::is_sorted(m.begin(), m.end()));
    }
    CHECK(total == labeled_graph_count(n));
    CHECK(masks.size() == labeled_graph_count(n));
  }
}

TEST_CASE("bucketing is label-invariant") {
  for (std::size_t n : {4, 5, 6}) {
    const auto buckets = bucket_by_spectrum(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    std::swap(perm[0], perm[n - 1]);
    SpectrumBuckets relabeled;
    for (const auto& [key, masks] : buckets)
      for (std::uint64_t m : masks) {
        const Graph h = relabel(graph_from_mask(n, m), perm);
        CHECK(spectrum_key(h) == key);
        relabeled[key].push_back(mask_of(h));
      }
    for (auto& [key, masks] : relabeled) std::sort(masks.begin(), masks.end());
    CHECK(relabeled == buckets);
    CHECK(bucket_sizes(relabeled) == bucket_sizes(buckets));
    CHECK(mate_classes(n, relabeled).size() == mate_classes(n, buckets).size());
  }
}

TEST_CASE("parallel kernels reproduce the serial ones") {
  for (std::size_t n : {3, 5, 6}) {
    const auto serial = bucket_by_spectrum_serial(n);
    for (int workers : {1, 2, 3}) CHECK(bucket_by_spectrum(n, workers) == serial);
  }
  for (std::size_t n : {4, 5}) {
    const auto s = soundness_harness_serial(n);
    for (int workers : {1, 3}) {
      const auto p = soundness_harness(n, workers);
      CHECK(to_json(p) == to_json(s));
    }
  }
}

TEST_CASE("no certified graph has a generalized-cospectral mate") {
  for (std::size_t n : {1, 2, 3, 4, 5, 6}) {
    std::uint64_t last_done = 0;
    const auto r = soundness_harness(n, 0, [&](std::uint64_t done, std::uint64_t total) {
      CHECK(done > last_done);
      CHECK(done <= total);
      last_done = done;
    });
    CHECK(r.graphs == labeled_graph_count(n));
    CHECK(last_done == r.graphs);
    CHECK(r.violations.empty());
    CHECK(r.certified_main <= r.certified_main2);
  }
}

TEST_CASE("spectrum key hash is stable") {
  const auto key = spectrum_key(Graph(2, {{0, 1}}));
  CHECK(key.phi_g == std::vector<long>{-1, 0, 1});
  CHECK(key.phi_gbar == std::vector<long>{0, 0, 1});
  CHECK(key.hash() == spectrum_key(Graph(2, {{0, 1}})).hash());
  CHECK(key.hash() != spectrum_key(Graph(2)).hash());
}
