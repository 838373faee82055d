#pragma once

// Random-graph experiment: how often each graph certificate applies to
// samples from G(n, 1/2).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gspec/numtheory.hpp"

namespace gspec {

struct ExperimentConfig {
  std::size_t n = 20;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;  // 0: OpenMP default
};

struct TrialOutcome {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  SquareFreeStatus::Tag main = SquareFreeStatus::Tag::Unknown;
  SquareFreeStatus::Tag main2 = SquareFreeStatus::Tag::Unknown;

  bool in_f() const { return main == SquareFreeStatus::Tag::OddSquareFree; }
  bool in_fprime() const { return main2 == SquareFreeStatus::Tag::OddSquareFree; }

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct ExperimentRow {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t count_f = 0;
  std::uint64_t count_fprime = 0;
  std::uint64_t count_unknown_f = 0;
  std::uint64_t count_unknown_fprime = 0;
  std::string ratio;  // count_fprime / count_f to five decimals, "*" if count_f = 0
  std::uint64_t seed = 0;
  std::string rng_id;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct ExperimentResult {
  ExperimentRow row;
  std::vector<TrialOutcome> outcomes;  // ordered by trial index
};

// Seed of trial index under the master seed; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

TrialOutcome run_trial(std::size_t n, std::uint64_t master, std::uint64_t index,
                       std::uint64_t budget);

ExperimentResult run_experiment_serial(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

ExperimentRow summarize(std::size_t n, std::uint64_t seed, const std::vector<TrialOutcome>& outcomes);

std::string csv_header();
std::string to_csv(const ExperimentRow& row);
nlohmann::json to_json(const ExperimentRow& row);

}  // namespace gspec
