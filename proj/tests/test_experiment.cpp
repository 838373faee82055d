#include <doctest.h>

#include "gspec/certify.hpp"
#include "gspec/errors.hpp"
#include "gspec/experiment.hpp"
#include "gspec/graph.hpp"

using namespace gspec;

TEST_CASE("experiment rows are deterministic") {
  ExperimentConfig cfg;
  cfg.n = 2;
  cfg.trials = 100;
  cfg.seed = 9;
  const auto a = run_experiment(cfg);
  const auto b = run_experiment(cfg);
  CHECK(a.row == b.row);
  CHECK(a.row.count_f <= 100);
  CHECK(a.row.count_fprime <= 100);
  CHECK(a.row.rng_id == kRngId);
  CHECK(to_csv(a.row) == to_csv(b.row));
}

TEST_CASE("worker count does not change the outcome") {
  ExperimentConfig cfg;
  cfg.n = 9;
  cfg.trials = 120;
  cfg.seed = 123;
  const auto serial = run_experiment_serial(cfg);
  for (int workers : {1, 2, 4}) {
    cfg.workers = workers;
    const auto parallel = run_experiment(cfg);
    CHECK(parallel.row == serial.row);
    CHECK(parallel.outcomes == serial.outcomes);
  }
}

TEST_CASE("trial outcomes match direct certification") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto t = run_trial(10, 77, i, kDefaultBudget);
    CHECK(t.seed == trial_seed(77, i));
    const auto c = certify_graph(random_gnp_half(10, t.seed));
    CHECK(t.in_f() == (c.main.verdict == Verdict::DGSCertified));
    CHECK(t.in_fprime() == (c.main2.verdict == Verdict::DGSCertified));
    if (t.in_f()) CHECK(t.in_fprime());
  }
}

TEST_CASE("trial seeds differ across indices and masters") {
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
  CHECK(trial_seed(5, 17) == trial_seed(5, 17));
}

TEST_CASE("summary counts and formatting") {
  std::vector<TrialOutcome> outcomes(4);
  using T = SquareFreeStatus::Tag;
  outcomes[0].main = T::OddSquareFree;
  outcomes[0].main2 = T::OddSquareFree;
  outcomes[1].main = T::Unknown;
  outcomes[1].main2 = T::OddSquareFree;
  outcomes[2].main = T::HasSquareFactor;
  outcomes[2].main2 = T::OddSquareFree;
  outcomes[3].main = T::Zero;
  outcomes[3].main2 = T::Zero;
  const auto row = summarize(30, 5, outcomes);
  CHECK(row.count_f == 1);
  CHECK(row.count_fprime == 3);
  CHECK(row.count_unknown_f == 1);
  CHECK(row.count_unknown_fprime == 0);
  CHECK(row.ratio == "3.00000");
  CHECK(to_csv(row) == "30,4,3,1,1,0,3.00000,5," + std::string(kRngId));
  CHECK(csv_header().find("count_Fprime,count_F") != std::string::npos);
  const auto j = to_json(row);
  CHECK(j["count_F"] == 1);
  CHECK(j["ratio"] == "3.00000");

  outcomes[0].main = T::Even;
  CHECK(summarize(30, 5, outcomes).ratio == "*");
}

TEST_CASE("experiment configuration is validated") {
  ExperimentConfig cfg;
  cfg.n = 1;
  CHECK_THROWS_AS(run_experiment(cfg), ArgumentError);
  cfg.n = 5;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_experiment_serial(cfg), ArgumentError);
}
