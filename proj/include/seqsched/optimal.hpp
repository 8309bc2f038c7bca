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
#include <string>
#include <utility>
#include <vector>

#include "seqsched/engines.hpp"
#include "seqsched/errors.hpp"
#include "seqsched/instance.hpp"

namespace seqsched {

struct OptResult {
  EpsValue makespan;
  Schedule schedule;  // a witness achieving the makespan (first found in DFS order)
  std::uint64_t nodes_explored = 0;
};

struct OptLimits {
  std::uint64_t max_nodes = 20'000'000;
};

namespace detail {

struct OptSearch {
  const Instance& inst;
  const OptLimits& limits;
  int n;
  int m;
  Rational inv_m;
  std::vector<EpsValue> suffix_min_sum;  // sum of min times of jobs [j, n)
  std::vector<EpsValue> suffix_min_max;  // max of min times of jobs [j, n)
  LoadVector loads;
  EpsValue mass;  // sum of current loads
  std::vector<int> sigma;
  EpsValue incumbent;
  std::vector<int> best;
  std::uint64_t nodes = 0;

  OptSearch(const Instance& inst, const OptLimits& limits)
      : inst(inst),
        limits(limits),
        n(inst.jobs()),
        m(inst.machines()),
        inv_m(Rational(1) / Rational(m)),
        suffix_min_sum(static_cast<std::size_t>(n) + 1),
        suffix_min_max(static_cast<std::size_t>(n) + 1),
        loads(zero_loads(inst.machines())),
        sigma(static_cast<std::size_t>(n), 0) {
    for (int j = n - 1; j >= 0; --j) {
      const auto ju = static_cast<std::size_t>(j);
      const EpsValue t = min_time(inst, j).first;
      suffix_min_sum[ju] = suffix_min_sum[ju + 1] + t;
      suffix_min_max[ju] = std::max(suffix_min_max[ju + 1], t);
    }
  }

  void dfs(int j, const EpsValue& current_max) {
    if (++nodes > limits.max_nodes) {
      throw SizeLimit("opt: exceeded the node budget of " + std::to_string(limits.max_nodes) +
                      " without a proof of optimality");
    }
    if (j == n) {
      if (current_max < incumbent) {
        incumbent = current_max;
        best = sigma;
      }
      return;
    }
    const auto ju = static_cast<std::size_t>(j);
    // node lower bound: current max load, average of placed + remaining
    // minimum mass, largest remaining minimum time
    EpsValue lower = (mass + suffix_min_sum[ju]).scaled(inv_m);
    if (current_max > lower) lower = current_max;
    if (suffix_min_max[ju] > lower) lower = suffix_min_max[ju];
    if (!(lower < incumbent)) return;
    for (int i = 0; i < m; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const EpsValue& t = inst.time(j, i);
      sigma[ju] = i;
      loads[iu] += t;
      mass += t;
      dfs(j + 1, std::max(current_max, loads[iu]));
      mass -= t;
      loads[iu] -= t;
    }
  }
};

}  // namespace detail

// Exact optimal makespan by depth-first branch and bound: jobs in input
// order, machines in index order, incumbent seeded with the greedy engine's
// schedule. Throws SizeLimit when the node budget runs out before the search
// proves optimality.
inline OptResult opt(const Instance& inst, const OptLimits& limits = {}) {
  Schedule greedy = play(inst, RationalityModel::greedy());
  detail::OptSearch search(inst, limits);
  search.incumbent = makespan(loads_after(inst, greedy.sigma, inst.jobs()));
  search.best = greedy.sigma;
  search.dfs(0, EpsValue{});
  OptResult result;
  result.makespan = std::move(search.incumbent);
  result.schedule.sigma = std::move(search.best);
  result.nodes_explored = search.nodes;
  return result;
}

// The two closed-form lower bounds on the optimal makespan:
//   avg    = (sum_j p_j) / m
//   maxmin = max_j p_j
// where p_j is job j's minimum processing time.
inline std::pair<EpsValue, EpsValue> opt_lower_bounds(const Instance& inst) {
  EpsValue sum;
  EpsValue mx;
  for (int j = 0; j < inst.jobs(); ++j) {
    const EpsValue t = min_time(inst, j).first;
    sum += t;
    if (t > mx) mx = t;
  }
  return {sum.scaled(Rational(1) / Rational(inst.machines())), mx};
}

}  // namespace seqsched
