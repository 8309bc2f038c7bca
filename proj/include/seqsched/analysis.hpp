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
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqsched/engines.hpp"
#include "seqsched/errors.hpp"
#include "seqsched/instance.hpp"
#include "seqsched/optimal.hpp"

namespace seqsched {

// Per-instance sequential-price-of-anarchy report. ratio_limit is the exact
// limit of equilibrium makespan over optimal makespan as eps -> 0+. When the
// model/machine-count pair has a built-in reference bound, it is attached
// and checked.
struct SpoaReport {
  std::string instance;
  RationalityModel model;
  int machines = 0;
  int jobs = 0;
  EpsValue equilibrium_makespan;
  EpsValue opt_makespan;
  Rational ratio_limit;
  std::optional<Rational> bound;
  bool bound_satisfied = true;
};

// Reference bound for the given model on m machines and n jobs:
//   lookahead(k), m = 2      2(k^2 - k + 1)
//   lookahead(k), general m  min(m*k*2^k + m, m + n*2^k)
//   greedy / simple-minded   m
//   perfect                  none
inline std::optional<Rational> spoa_bound(const RationalityModel& model, int machines, int jobs) {
  switch (model.kind) {
    case RationalityModel::Kind::Greedy:
    case RationalityModel::Kind::SimpleMinded:
      return Rational(machines);
    case RationalityModel::Kind::Perfect:
      return std::nullopt;
    case RationalityModel::Kind::Lookahead: {
      const BigInt k(model.k);
      if (machines == 2) {
        return Rational(2 * (k * k - k + 1));
      }
      const BigInt pow2k = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(model.k));
      const BigInt via_machines = BigInt(machines) * k * pow2k + machines;
      const BigInt via_jobs = BigInt(machines) + BigInt(jobs) * pow2k;
      return Rational(via_machines < via_jobs ? via_machines : via_jobs);
    }
  }
  return std::nullopt;
}

// Play the instance under `model`, solve for the optimal makespan, and take
// the ratio in the eps -> 0+ limit. Throws DegenerateOpt when the optimal
// makespan has constant part zero (the ratio has no finite limit).
inline SpoaReport spoa(const Instance& inst, const RationalityModel& model,
                       const EngineLimits& engine_limits = {}, const OptLimits& opt_limits = {}) {
  SpoaReport report;
  report.instance = inst.name();
  report.model = model;
  report.machines = inst.machines();
  report.jobs = inst.jobs();
  Schedule equilibrium = play(inst, model, engine_limits);
  report.equilibrium_makespan = makespan(loads_after(inst, equilibrium));
  OptResult optimum = opt(inst, opt_limits);
  report.opt_makespan = optimum.makespan;
  if (report.opt_makespan.c.is_zero()) {
    throw DegenerateOpt("spoa: optimal makespan " + report.opt_makespan.str() +
                        " has constant part zero");
  }
  report.ratio_limit = limit_ratio(report.equilibrium_makespan, report.opt_makespan);
  report.bound = spoa_bound(model, inst.machines(), inst.jobs());
  report.bound_satisfied = !report.bound || report.ratio_limit <= *report.bound;
  return report;
}

// The breakpoint positions 0 = n_0 < n_1 < ... < n_u = n that partition a
// two-machine play for the prefix-load analysis.
struct Breakpoints {
  std::vector<int> values;
};

// Breakpoint scan over a two-machine schedule. Starting at v = 1: compare
// D_1(v-1) + p_{1,v} with D_2(v-1) + p_{2,v}; scan forward for the next job
// placed on the favored machine; record it and continue after it. For
// schedules not produced by 1-lookahead play a scan may walk past job n,
// which is reported as ScanRanOffEnd rather than silently truncated.
inline Breakpoints breakpoints(const Instance& inst, const std::vector<int>& sigma) {
  if (inst.machines() != 2) {
    throw NotTwoMachines("breakpoints: defined for 2 machines, got " +
                         std::to_string(inst.machines()));
  }
  const int n = inst.jobs();
  if (static_cast<int>(sigma.size()) != n) {
    throw IndexOutOfRange("breakpoints: schedule covers " + std::to_string(sigma.size()) +
                          " of " + std::to_string(n) + " jobs");
  }
  // prefix loads D_i(l) for l = 0..n
  std::vector<EpsValue> d1(static_cast<std::size_t>(n) + 1);
  std::vector<EpsValue> d2(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (sigma[ju] != 0 && sigma[ju] != 1) {
      throw IndexOutOfRange("breakpoints: sigma[" + std::to_string(j) + "] = " +
                            std::to_string(sigma[ju]) + " is not a machine index");
    }
    d1[ju + 1] = d1[ju] + (sigma[ju] == 0 ? inst.time(j, 0) : EpsValue{});
    d2[ju + 1] = d2[ju] + (sigma[ju] == 1 ? inst.time(j, 1) : EpsValue{});
  }
  Breakpoints result;
  result.values.push_back(0);
  int v = 1;  // 1-based job position
  while (v <= n) {
    const auto vu = static_cast<std::size_t>(v);
    const int favored =
        d1[vu - 1] + inst.time(v - 1, 0) <= d2[vu - 1] + inst.time(v - 1, 1) ? 0 : 1;
    const int scan_start = v;
    while (v <= n && sigma[static_cast<std::size_t>(v - 1)] != favored) ++v;
    if (v > n) {
      throw ScanRanOffEnd("breakpoints: no job at or after position " +
                          std::to_string(scan_start) + " chooses machine " +
                          std::to_string(favored + 1));
    }
    result.values.push_back(v);
    ++v;
  }
  return result;
}

struct BreakpointCheck {
  int position = 0;          // n_l, a prefix length
  EpsValue prefix_makespan;  // D_max(n_l)
  EpsValue min_time_sum;     // sum of p_j over j <= n_l
  bool ok = true;
};

struct Claim1Result {
  bool ok = true;
  Breakpoints points;
  std::vector<BreakpointCheck> rows;
};

// Plays the two-machine game at 1-lookahead and verifies the breakpoint
// inequality D_max(n_l) <= sum_{j <= n_l} p_j at every breakpoint.
inline Claim1Result check_claim1(const Instance& inst, const EngineLimits& limits = {}) {
  if (inst.machines() != 2) {
    throw NotTwoMachines("check_claim1: defined for 2 machines, got " +
                         std::to_string(inst.machines()));
  }
  Schedule sched = play(inst, RationalityModel::lookahead(1), limits);
  Claim1Result result;
  result.points = breakpoints(inst, sched.sigma);
  for (int position : result.points.values) {
    BreakpointCheck row;
    row.position = position;
    row.prefix_makespan = makespan(loads_after(inst, sched.sigma, position));
    row.min_time_sum = total_min_time(inst, position);
    row.ok = row.prefix_makespan <= row.min_time_sum;
    result.ok = result.ok && row.ok;
    result.rows.push_back(std::move(row));
  }
  return result;
}

// Two-machine 1-lookahead makespan never exceeds the total minimum
// processing time.
inline bool check_lemma1(const Instance& inst, const EngineLimits& limits = {}) {
  if (inst.machines() != 2) {
    throw NotTwoMachines("check_lemma1: defined for 2 machines, got " +
                         std::to_string(inst.machines()));
  }
  Schedule sched = play(inst, RationalityModel::lookahead(1), limits);
  return makespan(loads_after(inst, sched)) <= total_min_time(inst);
}

// Sampled lower estimate of the worst-case makespan increase caused by the
// subgame of jobs [first, last] over all initial loads: the supremum itself
// ranges over all of R^m and is not finitely computable, so this maximizes
// over the zero vector, each unit vector scaled by the window's total
// minimum time, and `samples` seeded random vectors with entries in
// [0, 2 * sum p_j]. Adding samples can only increase the estimate.
inline EpsValue delta_l_estimate(const Instance& inst, int first, int last,
                                 const RationalityModel& model, int samples, std::uint64_t seed,
                                 const EngineLimits& limits = {}) {
  const int m = inst.machines();
  EpsValue window_min_sum;
  for (int j = first; j <= last; ++j) window_min_sum += min_time(inst, j).first;

  std::vector<LoadVector> sample_set;
  sample_set.push_back(zero_loads(m));
  for (int i = 0; i < m; ++i) {
    LoadVector d = zero_loads(m);
    d[static_cast<std::size_t>(i)] = window_min_sum;
    sample_set.push_back(std::move(d));
  }
  std::mt19937_64 rng(seed);
  const EpsValue twice_sum = window_min_sum.scaled(2);
  for (int s = 0; s < samples; ++s) {
    LoadVector d(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto numerator = static_cast<long long>(rng() % 1001);  // t in [0, 1] step 1/1000
      d[static_cast<std::size_t>(i)] = twice_sum.scaled(Rational(numerator, 1000));
    }
    sample_set.push_back(std::move(d));
  }

  EpsValue estimate;  // the zero sample contributes L_max(0, J) - 0 >= 0
  for (const auto& initial : sample_set) {
    const EpsValue before = makespan(initial);
    const EpsValue after = makespan(play_range(inst, first, last, initial, model, limits));
    const EpsValue increase = after - before;
    if (increase > estimate) estimate = increase;
  }
  return estimate;
}

// The anticipated-load bookkeeping along a schedule: A_i(l) is the load of
// machine i after the first l jobs plus the total time of later jobs whose
// minimum-processing-time machine is i. Returns max_i A_i(l) for
// l = 0, ..., n. Along simple-minded play this profile never increases.
inline std::vector<EpsValue> anticipated_max_profile(const Instance& inst,
                                                     const std::vector<int>& sigma) {
  const int n = inst.jobs();
  const int m = inst.machines();
  if (static_cast<int>(sigma.size()) != n) {
    throw IndexOutOfRange("anticipated_max_profile: schedule covers " +
                          std::to_string(sigma.size()) + " of " + std::to_string(n) + " jobs");
  }
  // assumed totals P_i([l+1:n]), peeled down as l advances
  LoadVector assumed = zero_loads(m);
  std::vector<int> assumed_machine(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    auto [t, i] = min_time(inst, j);
    assumed_machine[static_cast<std::size_t>(j)] = i;
    assumed[static_cast<std::size_t>(i)] += t;
  }
  LoadVector loads = zero_loads(m);
  std::vector<EpsValue> profile;
  profile.reserve(static_cast<std::size_t>(n) + 1);
  for (int l = 0;; ++l) {
    EpsValue a_max;
    bool seen = false;
    for (int i = 0; i < m; ++i) {
      const EpsValue a = loads[static_cast<std::size_t>(i)] + assumed[static_cast<std::size_t>(i)];
      if (!seen || a > a_max) {
        a_max = a;
        seen = true;
      }
    }
    profile.push_back(std::move(a_max));
    if (l == n) break;
    const auto lu = static_cast<std::size_t>(l);
    assumed[static_cast<std::size_t>(assumed_machine[lu])] -= min_time(inst, l).first;
    loads[static_cast<std::size_t>(sigma[lu])] += inst.time(l, sigma[lu]);
  }
  return profile;
}

struct MonotonicityResult {
  bool ok = true;
  std::vector<int> sigma;
  std::vector<EpsValue> profile;  // max_i A_i(l) for l = 0..n
};

// Plays the instance simple-mindedly and checks that max_i A_i(l) never
// increases from one step to the next.
inline MonotonicityResult check_simple_minded_monotonicity(const Instance& inst) {
  MonotonicityResult result;
  result.sigma = play(inst, RationalityModel::simple_minded()).sigma;
  result.profile = anticipated_max_profile(inst, result.sigma);
  for (std::size_t l = 1; l < result.profile.size(); ++l) {
    if (result.profile[l] > result.profile[l - 1]) {
      result.ok = false;
      break;
    }
  }
  return result;
}

struct BoundCheckSummary {
  std::vector<SpoaReport> reports;
  std::vector<std::string> errors;  // per-instance failures, "<name>: <what>"
  std::optional<Rational> max_ratio;
  bool all_satisfied = true;
};

// spoa() over a batch, collecting per-instance errors instead of aborting,
// plus the batch maximum ratio (the empirical price of anarchy).
inline BoundCheckSummary check_theorem_bounds(const std::vector<Instance>& batch,
                                              const RationalityModel& model,
                                              const EngineLimits& engine_limits = {},
                                              const OptLimits& opt_limits = {}) {
  BoundCheckSummary summary;
  for (const auto& inst : batch) {
    try {
      SpoaReport report = spoa(inst, model, engine_limits, opt_limits);
      if (!report.bound_satisfied) summary.all_satisfied = false;
      if (!summary.max_ratio || report.ratio_limit > *summary.max_ratio) {
        summary.max_ratio = report.ratio_limit;
      }
      summary.reports.push_back(std::move(report));
    } catch (const Error& ex) {
      summary.all_satisfied = false;
      summary.errors.push_back(inst.name() + ": " + ex.what());
    }
  }
  return summary;
}

// --- report rendering -------------------------------------------------------

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string spoa_csv_header() {
  return "instance,model,k,m,n,eq_c,eq_eps,opt_c,opt_eps,ratio,bound,ok";
}

// eps values split into constant/eps-coefficient columns for spreadsheets
inline std::string spoa_csv_row(const SpoaReport& r) {
  std::string row = csv_quote(r.instance);
  row += ',';
  row += r.model.kind == RationalityModel::Kind::Lookahead ? "lookahead" : r.model.str();
  row += ',';
  if (r.model.kind == RationalityModel::Kind::Lookahead) row += std::to_string(r.model.k);
  row += ',';
  row += std::to_string(r.machines);
  row += ',';
  row += std::to_string(r.jobs);
  row += ',';
  row += r.equilibrium_makespan.c.str();
  row += ',';
  row += r.equilibrium_makespan.e.str();
  row += ',';
  row += r.opt_makespan.c.str();
  row += ',';
  row += r.opt_makespan.e.str();
  row += ',';
  row += r.ratio_limit.str();
  row += ',';
  if (r.bound) row += r.bound->str();
  row += ',';
  row += r.bound_satisfied ? "ok" : "violated";
  return row;
}

}  // namespace seqsched
