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

#include "seqsched/errors.hpp"
#include "seqsched/instance.hpp"
#include "seqsched/optimal.hpp"

namespace seqsched {

// Exhaustive reference computations. These deliberately share no code with
// the branch-and-bound solver or the recursive induction in engines.hpp:
// they enumerate complete assignment tables and fold them level by level, so
// they can serve as independent cross-checks for both.

namespace detail {

inline std::uint64_t checked_power(int base, int exp, std::uint64_t cap, const char* who) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= static_cast<std::uint64_t>(base);
    if (v > cap) {
      throw SizeLimit(std::string(who) + ": " + std::to_string(base) + "^" +
                      std::to_string(exp) + " assignments exceed the enumeration cap");
    }
  }
  return v;
}

}  // namespace detail

// Optimal makespan by scanning every one of the m^n assignments in
// lexicographic order (job 0 most significant), keeping the first best.
inline OptResult exhaustive_opt(const Instance& inst) {
  const int n = inst.jobs();
  const int m = inst.machines();
  const std::uint64_t total = detail::checked_power(m, n, 1ull << 22, "exhaustive_opt");
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  OptResult result;
  result.nodes_explored = total;
  bool first = true;
  for (std::uint64_t code = 0; code < total; ++code) {
    LoadVector loads = zero_loads(m);
    for (int j = 0; j < n; ++j) {
      loads[static_cast<std::size_t>(digits[static_cast<std::size_t>(j)])] +=
          inst.time(j, digits[static_cast<std::size_t>(j)]);
    }
    EpsValue ms = makespan(loads);
    if (first || ms < result.makespan) {
      first = false;
      result.makespan = std::move(ms);
      result.schedule.sigma = digits;
    }
    // odometer step, least significant digit last
    for (int j = n - 1; j >= 0; --j) {
      auto& d = digits[static_cast<std::size_t>(j)];
      if (++d < m) break;
      d = 0;
    }
  }
  if (first) result.schedule.sigma.clear();  // n == 0: empty schedule, makespan 0
  return result;
}

// Schedule realized under full backward induction, computed from an explicit
// table of all m^n leaf outcomes folded bottom-up one job layer at a time.
// Ties resolve to the lowest machine index, the same rule the engines use.
inline std::vector<int> enumeration_spe(const Instance& inst) {
  const int n = inst.jobs();
  const int m = inst.machines();
  if (n == 0) return {};
  // the leaf table holds m^n load vectors, so the cap is much tighter here
  const std::uint64_t total = detail::checked_power(m, n, 1ull << 18, "enumeration_spe");
  // leaf layer: final loads of every complete assignment
  std::vector<LoadVector> layer(total);
  {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::uint64_t code = 0; code < total; ++code) {
      LoadVector loads = zero_loads(m);
      for (int j = 0; j < n; ++j) {
        loads[static_cast<std::size_t>(digits[static_cast<std::size_t>(j)])] +=
            inst.time(j, digits[static_cast<std::size_t>(j)]);
      }
      layer[code] = std::move(loads);
      for (int j = n - 1; j >= 0; --j) {
        auto& d = digits[static_cast<std::size_t>(j)];
        if (++d < m) break;
        d = 0;
      }
    }
  }
  // fold job layers from the last player up, remembering each layer's choices
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(n));
  std::uint64_t prefixes = total;
  for (int j = n - 1; j >= 0; --j) {
    prefixes /= static_cast<std::uint64_t>(m);
    auto& picks = choice[static_cast<std::size_t>(j)];
    picks.resize(prefixes);
    std::vector<LoadVector> folded(prefixes);
    for (std::uint64_t prefix = 0; prefix < prefixes; ++prefix) {
      const std::uint64_t base = prefix * static_cast<std::uint64_t>(m);
      int pick = 0;
      for (int d = 1; d < m; ++d) {
        const auto& candidate = layer[base + static_cast<std::uint64_t>(d)];
        const auto& current = layer[base + static_cast<std::uint64_t>(pick)];
        if (candidate[static_cast<std::size_t>(d)] < current[static_cast<std::size_t>(pick)]) {
          pick = d;
        }
      }
      picks[prefix] = pick;
      folded[prefix] = std::move(layer[base + static_cast<std::uint64_t>(pick)]);
    }
    layer = std::move(folded);
  }
  // replay the realized path
  std::vector<int> sigma;
  sigma.reserve(static_cast<std::size_t>(n));
  std::uint64_t prefix = 0;
  for (int j = 0; j < n; ++j) {
    const int d = choice[static_cast<std::size_t>(j)][prefix];
    sigma.push_back(d);
    prefix = prefix * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(d);
  }
  return sigma;
}

}  // namespace seqsched
