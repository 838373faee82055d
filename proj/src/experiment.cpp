#include "gspec/experiment.hpp"

#include <bit>
#include <iomanip>
#include <sstream>

#include "gspec/certify.hpp"
#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "mix.hpp"

namespace gspec {

namespace {

SquareFreeStatus::Tag tag_of(const CertificateReport& r, const std::optional<SquareFreeStatus>& s) {
  if (r.verdict == Verdict::NotControllable || !s) return SquareFreeStatus::Tag::Zero;
  return s->tag();
}

void require_config(const ExperimentConfig& cfg) {
  if (cfg.n < 2) throw ArgumentError("experiment: n must be at least 2");
  if (cfg.trials < 1) throw ArgumentError("experiment: trials must be at least 1");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ std::rotl(index * 0xD1B54A32D192ED03ULL, 17);
  return detail::splitmix64(state);
}

TrialOutcome run_trial(std::size_t n, std::uint64_t master, std::uint64_t index, std::uint64_t budget) {
  TrialOutcome out;
  out.index = index;
  out.seed = trial_seed(master, index);
  const auto certs = certify_graph(random_gnp_half(n, out.seed), budget);
  out.main = tag_of(certs.main, certs.main.status_main);
  out.main2 = tag_of(certs.main2, certs.main2.status_main2);
  return out;
}

ExperimentRow summarize(std::size_t n, std::uint64_t seed, const std::vector<TrialOutcome>& outcomes) {
  ExperimentRow row;
  row.n = n;
  row.trials = outcomes.size();
  row.seed = seed;
  row.rng_id = kRngId;
  for (const auto& t : outcomes) {
    row.count_f += t.in_f() ? 1 : 0;
    row.count_fprime += t.in_fprime() ? 1 : 0;
    row.count_unknown_f += t.main == SquareFreeStatus::Tag::Unknown ? 1 : 0;
    row.count_unknown_fprime += t.main2 == SquareFreeStatus::Tag::Unknown ? 1 : 0;
  }
  if (row.count_f == 0) {
    row.ratio = "*";
  } else {
    std::ostringstream os;
    os << std::fixed << std::setprecision(5)
       << static_cast<double>(row.count_fprime) / static_cast<double>(row.count_f);
    row.ratio = os.str();
  }
  return row;
}

ExperimentResult run_experiment_serial(const ExperimentConfig& cfg) {
  require_config(cfg);
  ExperimentResult result;
  result.outcomes.reserve(cfg.trials);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) result.outcomes.push_back(run_trial(cfg.n, cfg.seed, i, cfg.budget));
  result.row = summarize(cfg.n, cfg.seed, result.outcomes);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  require_config(cfg);
  ExperimentResult result;
  result.outcomes.resize(cfg.trials);
#pragma omp parallel for schedule(dynamic) num_threads(detail::thread_count(cfg.workers))
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cfg.trials); ++i)
    result.outcomes[static_cast<std::size_t>(i)] = run_trial(cfg.n, cfg.seed, static_cast<std::uint64_t>(i), cfg.budget);
  result.row = summarize(cfg.n, cfg.seed, result.outcomes);
  return result;
}

std::string csv_header() {
  return "n,trials,count_Fprime,count_F,count_unknown_F,count_unknown_Fprime,ratio,seed,rng_id";
}

std::string to_csv(const ExperimentRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.trials << ',' << row.count_fprime << ',' << row.count_f << ',' << row.count_unknown_f
     << ',' << row.count_unknown_fprime << ',' << row.ratio << ',' << row.seed << ',' << row.rng_id;
  return os.str();
}

nlohmann::json to_json(const ExperimentRow& row) {
  return {{"n", row.n},
          {"trials", row.trials},
          {"count_F", row.count_f},
          {"count_Fprime", row.count_fprime},
          {"count_unknown_F", row.count_unknown_f},
          {"count_unknown_Fprime", row.count_unknown_fprime},
          {"ratio", row.ratio},
          {"seed", row.seed},
          {"rng_id", row.rng_id}};
}

}  // namespace gspec
