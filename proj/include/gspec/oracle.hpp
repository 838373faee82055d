#pragma once

// Exhaustive ground truth for small orders: every labeled graph is bucketed by
// its generalized spectrum and the certificates are checked against the
// buckets that contain non-isomorphic mates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gspec/certify.hpp"
#include "gspec/graph.hpp"

namespace gspec {

inline constexpr std::size_t kOracleMaxOrder = 7;

// Exact coefficient tuples of (phi_G, phi_Gbar).
struct SpectrumKey {
  std::vector<long> phi_g;
  std::vector<long> phi_gbar;

  // FNV-1a over the decimal coefficient text, for compact reporting.
  std::uint64_t hash() const;

  friend auto operator<=>(const SpectrumKey&, const SpectrumKey&) = default;
  friend bool operator==(const SpectrumKey&, const SpectrumKey&) = default;
};

SpectrumKey spectrum_key(const Graph& g);

std::size_t edge_slots(std::size_t n);  // C(n, 2)
std::uint64_t labeled_graph_count(std::size_t n);

// Bit k of mask selects the k-th pair in (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Visits all 2^C(n,2) labeled graphs in increasing mask order. 1 <= n <= 7.
void enumerate_graphs(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& visit);

// Masks grouped by spectrum key; masks ascend within each bucket.
using SpectrumBuckets = std::map<SpectrumKey, std::vector<std::uint64_t>>;

SpectrumBuckets bucket_by_spectrum_serial(std::size_t n);
// Partitions the mask range over OpenMP threads; the result is identical to
// the serial one for any worker count.
SpectrumBuckets bucket_by_spectrum(std::size_t n, int workers = 0);

struct MateClass {
  SpectrumKey key;
  std::vector<Graph> members;  // pairwise non-isomorphic, at least two
};

// Splits each bucket into isomorphism classes (first mask of each class is
// the representative) and keeps the buckets with two or more classes.
std::vector<MateClass> mate_classes(std::size_t n, const SpectrumBuckets& buckets);
std::vector<MateClass> find_gspec_mates(std::size_t n, int workers = 0);

struct Violation {
  std::string graph6;
  CertificateReport main;
  CertificateReport main2;
};

struct SoundnessReport {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t certified_main = 0;
  std::uint64_t certified_main2 = 0;
  std::uint64_t unknown = 0;
  std::size_t mate_class_count = 0;
  std::vector<Violation> violations;
};

SoundnessReport soundness_harness_serial(std::size_t n);
SoundnessReport soundness_harness(std::size_t n, int workers = 0,
                                  const std::function<void(std::uint64_t, std::uint64_t)>& progress = {});

nlohmann::json to_json(const SoundnessReport& r);

}  // namespace gspec
