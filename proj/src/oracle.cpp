#include "gspec/oracle.hpp"

#include <algorithm>
#include <omp.h>

#include "gspec/errors.hpp"
#include "mix.hpp"

namespace gspec {

namespace {

// Independent of the worker count so that chunk-ordered merging reproduces
// the serial bucket contents exactly.
constexpr std::uint64_t kChunks = 256;

void require_order(std::size_t n) {
  if (n < 1 || n > kOracleMaxOrder)
    throw ArgumentError("oracle: order must be in [1, " + std::to_string(kOracleMaxOrder) + "], got " +
                        std::to_string(n));
}

std::vector<long> small_coefficients(const IntPoly& f) {
  std::vector<long> out;
  for (const auto& c : f.coefficients()) {
    if (!c.fits_slong_p()) throw InvariantViolation("spectrum coefficient out of range");
    out.push_back(c.get_si());
  }
  return out;
}

void merge_into(SpectrumBuckets& into, SpectrumBuckets&& part) {
  for (auto& [key, masks] : part) {
    auto& dst = into[key];
    dst.insert(dst.end(), masks.begin(), masks.end());
  }
}

SpectrumBuckets bucket_range(std::size_t n, std::uint64_t begin, std::uint64_t end) {
  SpectrumBuckets local;
  for (std::uint64_t mask = begin; mask < end; ++mask)
    local[spectrum_key(graph_from_mask(n, mask))].push_back(mask);
  return local;
}

bool certified(const GraphCertificates& c) {
  return c.main.verdict == Verdict::DGSCertified || c.main2.verdict == Verdict::DGSCertified;
}

}  // namespace

int detail::thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

std::uint64_t SpectrumKey::hash() const {
  std::string text;
  for (long c : phi_g) text += std::to_string(c) + ',';
  text += ';';
  for (long c : phi_gbar) text += std::to_string(c) + ',';
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SpectrumKey spectrum_key(const Graph& g) {
  const auto spec = generalized_spectrum(g);
  return {small_coefficients(spec.phi_G), small_coefficients(spec.phi_Gbar)};
}

std::size_t edge_slots(std::size_t n) { return n * (n - 1) / 2; }

std::uint64_t labeled_graph_count(std::size_t n) { return std::uint64_t{1} << edge_slots(n); }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) g.set_edge(i, j);
  return g;
}

void enumerate_graphs(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& visit) {
  require_order(n);
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask, graph_from_mask(n, mask));
}

SpectrumBuckets bucket_by_spectrum_serial(std::size_t n) {
  SpectrumBuckets buckets;
  enumerate_graphs(n, [&](std::uint64_t mask, const Graph& g) { buckets[spectrum_key(g)].push_back(mask); });
  return buckets;
}

SpectrumBuckets bucket_by_spectrum(std::size_t n, int workers) {
  require_order(n);
  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t chunks = std::min(kChunks, total);
  std::vector<SpectrumBuckets> parts(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(detail::thread_count(workers))
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    parts[uc] = bucket_range(n, total * uc / chunks, total * (uc + 1) / chunks);
  }
  SpectrumBuckets buckets;
  for (auto& part : parts) merge_into(buckets, std::move(part));
  return buckets;
}

namespace {

// Isomorphism class representatives of one bucket, in first-mask order.
std::vector<Graph> class_representatives(std::size_t n, const std::vector<std::uint64_t>& masks) {
  std::vector<Graph> reps;
  for (std::uint64_t mask : masks) {
    Graph g = graph_from_mask(n, mask);
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) { return is_isomorphic(r, g); });
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

std::vector<std::vector<Graph>> all_representatives(std::size_t n, const SpectrumBuckets& buckets, int workers) {
  std::vector<const std::vector<std::uint64_t>*> order;
  order.reserve(buckets.size());
  for (const auto& [key, masks] : buckets) order.push_back(&masks);
  std::vector<std::vector<Graph>> reps(order.size());
#pragma omp parallel for schedule(dynamic) num_threads(detail::thread_count(workers))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(order.size()); ++b)
    reps[static_cast<std::size_t>(b)] = class_representatives(n, *order[static_cast<std::size_t>(b)]);
  return reps;
}

std::vector<MateClass> collect_mates(const SpectrumBuckets& buckets, std::vector<std::vector<Graph>>&& reps) {
  std::vector<MateClass> out;
  std::size_t b = 0;
  for (const auto& [key, masks] : buckets) {
    if (reps[b].size() >= 2) out.push_back({key, std::move(reps[b])});
    ++b;
  }
  return out;
}

}  // namespace

std::vector<MateClass> mate_classes(std::size_t n, const SpectrumBuckets& buckets) {
  return collect_mates(buckets, all_representatives(n, buckets, 1));
}

std::vector<MateClass> find_gspec_mates(std::size_t n, int workers) {
  const auto buckets = bucket_by_spectrum(n, workers);
  return collect_mates(buckets, all_representatives(n, buckets, workers));
}

SoundnessReport soundness_harness_serial(std::size_t n) {
  require_order(n);
  SoundnessReport report;
  report.n = n;
  SpectrumBuckets buckets;
  std::vector<std::pair<std::uint64_t, GraphCertificates>> certified_graphs;
  enumerate_graphs(n, [&](std::uint64_t mask, const Graph& g) {
    ++report.graphs;
    buckets[spectrum_key(g)].push_back(mask);
    auto certs = certify_graph(g);
    if (certs.main.verdict == Verdict::DGSCertified) ++report.certified_main;
    if (certs.main2.verdict == Verdict::DGSCertified) ++report.certified_main2;
    if (certs.main.verdict == Verdict::Unknown || certs.main2.verdict == Verdict::Unknown) ++report.unknown;
    if (certified(certs)) certified_graphs.emplace_back(mask, std::move(certs));
  });
  const auto mates = mate_classes(n, buckets);
  report.mate_class_count = mates.size();
  for (auto& [mask, certs] : certified_graphs) {
    const Graph g = graph_from_mask(n, mask);
    const auto key = spectrum_key(g);
    const bool has_mate = std::any_of(mates.begin(), mates.end(), [&](const MateClass& m) { return m.key == key; });
    if (has_mate) report.violations.push_back({emit_graph6(g), std::move(certs.main), std::move(certs.main2)});
  }
  return report;
}

SoundnessReport soundness_harness(std::size_t n, int workers,
                                  const std::function<void(std::uint64_t, std::uint64_t)>& progress) {
  require_order(n);
  const auto buckets = bucket_by_spectrum(n, workers);
  auto reps = all_representatives(n, buckets, workers);

  std::vector<const std::vector<std::uint64_t>*> order;
  std::vector<bool> mate_bucket;
  for (const auto& [key, masks] : buckets) order.push_back(&masks);
  for (const auto& r : reps) mate_bucket.push_back(r.size() >= 2);

  struct Tally {
    std::uint64_t main = 0, main2 = 0, unknown = 0;
    std::vector<std::pair<std::uint64_t, Violation>> violations;
  };
  std::vector<Tally> tallies(order.size());
  const std::uint64_t total = labeled_graph_count(n);
  std::uint64_t done = 0;

#pragma omp parallel for schedule(dynamic) num_threads(detail::thread_count(workers))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(order.size()); ++b) {
    const auto ub = static_cast<std::size_t>(b);
    Tally& t = tallies[ub];
    for (std::uint64_t mask : *order[ub]) {
      const Graph g = graph_from_mask(n, mask);
      auto certs = certify_graph(g);
      if (certs.main.verdict == Verdict::DGSCertified) ++t.main;
      if (certs.main2.verdict == Verdict::DGSCertified) ++t.main2;
      if (certs.main.verdict == Verdict::Unknown || certs.main2.verdict == Verdict::Unknown) ++t.unknown;
      if (mate_bucket[ub] && certified(certs))
        t.violations.emplace_back(mask, Violation{emit_graph6(g), std::move(certs.main), std::move(certs.main2)});
    }
    if (progress) {
#pragma omp critical(gspec_oracle_progress)
      {
        done += order[ub]->size();
        progress(done, total);
      }
    }
  }

  SoundnessReport report;
  report.n = n;
  report.graphs = total;
  report.mate_class_count = static_cast<std::size_t>(std::count(mate_bucket.begin(), mate_bucket.end(), true));
  std::vector<std::pair<std::uint64_t, Violation>> violations;
  for (auto& t : tallies) {
    report.certified_main += t.main;
    report.certified_main2 += t.main2;
    report.unknown += t.unknown;
    for (auto& v : t.violations) violations.push_back(std::move(v));
  }
  std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [mask, v] : violations) report.violations.push_back(std::move(v));
  return report;
}

nlohmann::json to_json(const SoundnessReport& r) {
  auto violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"graph6", v.graph6}, {"main", to_json(v.main)}, {"main2", to_json(v.main2)}});
  return {{"n", r.n},
          {"graphs", r.graphs},
          {"certified_main", r.certified_main},
          {"certified_main2", r.certified_main2},
          {"unknown", r.unknown},
          {"mate_classes", r.mate_class_count},
          {"violations", std::move(violations)}};
}

}  // namespace gspec
