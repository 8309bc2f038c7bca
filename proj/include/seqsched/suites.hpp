// Copyright 2026 The seqsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seqsched/analysis.hpp"
#include "seqsched/engines.hpp"
#include "seqsched/errors.hpp"
#include "seqsched/generators.hpp"
#include "seqsched/instance.hpp"
#include "seqsched/oracles.hpp"
#include "seqsched/parallel.hpp"

namespace seqsched {

// Seeded property suites over randomized instance ensembles. Instances are
// always generated up front from the master seed, so results are identical
// for any worker count.

struct SuiteOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int jobs = 1;  // worker threads across trials
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failure_messages;
  std::optional<std::string> first_counterexample;  // serialized instance
  bool ok() const { return failed == 0; }
};

namespace detail {

inline Instance random_instance(std::mt19937_64& master, int machines_lo, int machines_hi,
                                int jobs_lo, int jobs_hi) {
  GeneratorSpec spec;
  spec.family = Family::Random;
  spec.machines = machines_lo + static_cast<int>(master() %
                      static_cast<std::uint64_t>(machines_hi - machines_lo + 1));
  spec.jobs = jobs_lo + static_cast<int>(master() %
                  static_cast<std::uint64_t>(jobs_hi - jobs_lo + 1));
  spec.seed = master();
  return gen(spec);
}

// check(trial, instance) -> failure message, or nullopt on pass
inline SuiteResult run_ensemble(
    std::string name, const SuiteOptions& opts, std::vector<Instance> instances,
    const std::function<std::optional<std::string>(int, const Instance&)>& check) {
  SuiteResult result;
  result.name = std::move(name);
  result.seed = opts.seed;
  result.trials = static_cast<int>(instances.size());
  std::vector<std::optional<std::string>> outcomes(instances.size());
  parallel_for_index(result.trials, opts.jobs, [&](int t) {
    try {
      outcomes[static_cast<std::size_t>(t)] = check(t, instances[static_cast<std::size_t>(t)]);
    } catch (const std::exception& ex) {
      outcomes[static_cast<std::size_t>(t)] = std::string("exception: ") + ex.what();
    }
  });
  for (int t = 0; t < result.trials; ++t) {
    const auto& outcome = outcomes[static_cast<std::size_t>(t)];
    if (!outcome) {
      ++result.passed;
      continue;
    }
    ++result.failed;
    if (result.failure_messages.size() < 5) {
      result.failure_messages.push_back("trial " + std::to_string(t) + " (" +
                                        instances[static_cast<std::size_t>(t)].name() +
                                        "): " + *outcome);
    }
    if (!result.first_counterexample) {
      result.first_counterexample = instances[static_cast<std::size_t>(t)].to_json().dump(2);
    }
  }
  return result;
}

inline std::vector<Instance> two_machine_ensemble(const SuiteOptions& opts) {
  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(opts.trials));
  for (int t = 0; t < opts.trials; ++t) {
    instances.push_back(random_instance(master, 2, 2, 1, 10));
  }
  return instances;
}

}  // namespace detail

// Two-machine 1-lookahead makespan <= total minimum processing time, on a
// seeded random ensemble (n <= 10).
inline SuiteResult run_lemma1_suite(const SuiteOptions& opts) {
  return detail::run_ensemble(
      "lemma1", opts, detail::two_machine_ensemble(opts),
      [](int, const Instance& inst) -> std::optional<std::string> {
        Schedule sched = play(inst, RationalityModel::lookahead(1));
        const EpsValue lhs = makespan(loads_after(inst, sched));
        const EpsValue rhs = total_min_time(inst);
        if (lhs <= rhs) return std::nullopt;
        return "makespan " + lhs.str() + " exceeds total min time " + rhs.str();
      });
}

// Breakpoints of the 1-lookahead play exist (no scan runs off the end) and
// the prefix inequality holds at every one. Runs on the same ensemble as
// lemma1 for a given seed.
inline SuiteResult run_claim1_suite(const SuiteOptions& opts) {
  return detail::run_ensemble(
      "claim1", opts, detail::two_machine_ensemble(opts),
      [](int, const Instance& inst) -> std::optional<std::string> {
        const Claim1Result r = check_claim1(inst);
        if (r.ok) return std::nullopt;
        for (const auto& row : r.rows) {
          if (!row.ok) {
            return "at breakpoint " + std::to_string(row.position) + ": prefix makespan " +
                   row.prefix_makespan.str() + " exceeds " + row.min_time_sum.str();
          }
        }
        return "breakpoint inequality violated";
      });
}

// max_i A_i(l) never increases along simple-minded play (m <= 5, n <= 12).
inline SuiteResult run_simpleminded_monotone_suite(const SuiteOptions& opts) {
  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(opts.trials));
  for (int t = 0; t < opts.trials; ++t) {
    instances.push_back(detail::random_instance(master, 2, 5, 1, 12));
  }
  return detail::run_ensemble(
      "simpleminded-monotone", opts, std::move(instances),
      [](int, const Instance& inst) -> std::optional<std::string> {
        const MonotonicityResult r = check_simple_minded_monotonicity(inst);
        if (r.ok) return std::nullopt;
        for (std::size_t l = 1; l < r.profile.size(); ++l) {
          if (r.profile[l] > r.profile[l - 1]) {
            return "A_max rose from " + r.profile[l - 1].str() + " to " + r.profile[l].str() +
                   " at step " + std::to_string(l);
          }
        }
        return "anticipated-load profile not monotone";
      });
}

// Every per-instance ratio stays within the model's reference bound:
// lookahead(k) on 2 machines within 2(k^2-k+1) for k in {2, 3}; lookahead(k)
// on m in {3, 4} within min(mk2^k + m, m + n2^k) for k in {1, 2}; greedy and
// simple-minded within m. `trials` instances per configuration, n <= 10.
inline SuiteResult run_theorem_bounds_suite(const SuiteOptions& opts) {
  struct Config {
    RationalityModel model;
    int machines;
  };
  std::vector<Config> configs;
  for (int k : {2, 3}) configs.push_back({RationalityModel::lookahead(k), 2});
  for (int m : {3, 4}) {
    for (int k : {1, 2}) configs.push_back({RationalityModel::lookahead(k), m});
  }
  for (int m : {2, 3, 4}) configs.push_back({RationalityModel::greedy(), m});
  for (int m : {2, 3, 4}) configs.push_back({RationalityModel::simple_minded(), m});

  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  std::vector<RationalityModel> models;
  for (const auto& config : configs) {
    for (int t = 0; t < opts.trials; ++t) {
      instances.push_back(
          detail::random_instance(master, config.machines, config.machines, 1, 10));
      models.push_back(config.model);
    }
  }
  return detail::run_ensemble(
      "theorem-bounds", opts, std::move(instances),
      [models](int t, const Instance& inst) -> std::optional<std::string> {
        const SpoaReport report = spoa(inst, models[static_cast<std::size_t>(t)]);
        if (report.bound_satisfied) return std::nullopt;
        return report.model.str() + ": ratio " + report.ratio_limit.str() +
               " exceeds bound " + report.bound->str();
      });
}

// play(lookahead(n-1)) equals play(perfect) and play(lookahead(0)) equals
// play(greedy), schedule-exact, alternating (m=2, n<=8) and (m=3, n<=6).
inline SuiteResult run_model_coincidence_suite(const SuiteOptions& opts) {
  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(opts.trials));
  for (int t = 0; t < opts.trials; ++t) {
    instances.push_back(t % 2 == 0 ? detail::random_instance(master, 2, 2, 1, 8)
                                   : detail::random_instance(master, 3, 3, 1, 6));
  }
  return detail::run_ensemble(
      "model-coincidence", opts, std::move(instances),
      [](int, const Instance& inst) -> std::optional<std::string> {
        const int n = inst.jobs();
        const Schedule perfect = play(inst, RationalityModel::perfect());
        const Schedule deep = play(inst, RationalityModel::lookahead(n > 0 ? n - 1 : 0));
        if (deep.sigma != perfect.sigma) {
          return "lookahead(n-1) schedule differs from perfect";
        }
        const Schedule greedy = play(inst, RationalityModel::greedy());
        const Schedule shallow = play(inst, RationalityModel::lookahead(0));
        if (shallow.sigma != greedy.sigma) {
          return "lookahead(0) schedule differs from greedy";
        }
        return std::nullopt;
      });
}

// Branch-and-bound optimum equals the exhaustive-scan optimum (m <= 3,
// n <= 8).
inline SuiteResult run_opt_oracle_suite(const SuiteOptions& opts) {
  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(opts.trials));
  for (int t = 0; t < opts.trials; ++t) {
    instances.push_back(detail::random_instance(master, 2, 3, 1, 8));
  }
  return detail::run_ensemble(
      "opt-oracle", opts, std::move(instances),
      [](int, const Instance& inst) -> std::optional<std::string> {
        const OptResult fast = opt(inst);
        const OptResult slow = exhaustive_opt(inst);
        if (fast.makespan == slow.makespan) return std::nullopt;
        return "branch-and-bound makespan " + fast.makespan.str() +
               " != exhaustive makespan " + slow.makespan.str();
      });
}

// Perfect-rationality engine vs. the independent full-enumeration backward
// induction (m = 2, n <= 6): identical schedules. Used by the acceptance
// suite alongside opt-oracle.
inline SuiteResult run_spe_oracle_suite(const SuiteOptions& opts) {
  std::mt19937_64 master(opts.seed);
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(opts.trials));
  for (int t = 0; t < opts.trials; ++t) {
    instances.push_back(detail::random_instance(master, 2, 2, 1, 6));
  }
  return detail::run_ensemble(
      "spe-oracle", opts, std::move(instances),
      [](int, const Instance& inst) -> std::optional<std::string> {
        const Schedule engine = play(inst, RationalityModel::perfect());
        const std::vector<int> reference = enumeration_spe(inst);
        if (engine.sigma == reference) return std::nullopt;
        return "engine schedule differs from enumeration backward induction";
      });
}

// The CLI-visible suite names.
inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "lemma1") return run_lemma1_suite(opts);
  if (name == "claim1") return run_claim1_suite(opts);
  if (name == "simpleminded-monotone") return run_simpleminded_monotone_suite(opts);
  if (name == "theorem-bounds") return run_theorem_bounds_suite(opts);
  if (name == "model-coincidence") return run_model_coincidence_suite(opts);
  if (name == "opt-oracle") return run_opt_oracle_suite(opts);
  throw UnknownSuite("unknown suite \"" + name +
                     "\"; expected one of lemma1, claim1, simpleminded-monotone, "
                     "theorem-bounds, model-coincidence, opt-oracle");
}

}  // namespace seqsched
