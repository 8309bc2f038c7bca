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

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqsched/errors.hpp"
#include "seqsched/instance.hpp"

namespace seqsched {

// The four decision procedures a player can run:
//
//   perfect       full backward induction over the whole remaining game
//   lookahead(k)  backward induction over a window of itself plus the next
//                 k jobs, treating the window's last job as the game's last;
//                 k = 0 coincides with greedy, k >= n-1 with perfect
//   simple-minded current load + own time + total time of successors assumed
//                 to pick their minimum-processing-time machine
//   greedy        current load + own time, nothing else
//
// Ties are broken toward the lowest machine index, at every level of every
// induction, identically across all engines.
struct RationalityModel {
  enum class Kind { Perfect, Lookahead, SimpleMinded, Greedy };

  Kind kind = Kind::Greedy;
  int k = 0;  // lookahead depth; meaningful for Kind::Lookahead only

  static RationalityModel perfect() { return {Kind::Perfect, 0}; }
  static RationalityModel lookahead(int k) {
    if (k < 0) throw InvalidSpec("lookahead depth must be >= 0, got " + std::to_string(k));
    return {Kind::Lookahead, k};
  }
  static RationalityModel simple_minded() { return {Kind::SimpleMinded, 0}; }
  static RationalityModel greedy() { return {Kind::Greedy, 0}; }

  std::string str() const {
    switch (kind) {
      case Kind::Perfect: return "perfect";
      case Kind::Lookahead: return "lookahead(" + std::to_string(k) + ")";
      case Kind::SimpleMinded: return "simple-minded";
      case Kind::Greedy: return "greedy";
    }
    return "?";
  }

  friend bool operator==(const RationalityModel&, const RationalityModel&) = default;
};

// Guard on the size of a single backward-induction window. The recursion
// visits m^window nodes of exact arithmetic, so anything past these defaults
// stops being desk-scale.
struct EngineLimits {
  int max_window_two_machines = 22;
  int max_window_general = 14;

  int window_cap(int machines) const {
    return machines <= 2 ? max_window_two_machines : max_window_general;
  }
};

// Outcome of one player's computation.
struct Decision {
  int machine = 0;
  EpsValue cost;
  std::vector<std::pair<int, EpsValue>> alternatives;  // (machine, anticipated cost)
};

namespace detail {

// End-of-window loads when jobs [t, last] play best responses against the
// window horizon: each job minimizes the load of its chosen machine at the
// moment job `last` has played. `loads` is mutated during the descent and
// restored before returning.
inline LoadVector window_final_loads(const Instance& inst, int t, int last, LoadVector& loads) {
  if (t > last) return loads;
  std::optional<EpsValue> best_cost;
  LoadVector best_final;
  const int m = inst.machines();
  for (int i = 0; i < m; ++i) {
    auto& slot = loads[static_cast<std::size_t>(i)];
    EpsValue saved = slot;
    slot += inst.time(t, i);
    LoadVector final_loads = window_final_loads(inst, t + 1, last, loads);
    slot = std::move(saved);
    const EpsValue& cost = final_loads[static_cast<std::size_t>(i)];
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best_final = std::move(final_loads);
    }
  }
  return best_final;
}

}  // namespace detail

// Backward induction for the deciding job over the window [job, last]. The
// anticipated cost of choosing machine i is the load of machine i at the end
// of the window when the rest of the window responds optimally.
inline Decision decide_window(const Instance& inst, int job, int last, const LoadVector& loads,
                              const EngineLimits& limits = {}) {
  const int window = last - job + 1;
  const int cap = limits.window_cap(inst.machines());
  if (window > cap) {
    throw SizeLimit("induction window of " + std::to_string(window) + " jobs on " +
                    std::to_string(inst.machines()) + " machines exceeds the limit of " +
                    std::to_string(cap));
  }
  LoadVector work = loads;
  Decision decision;
  std::optional<EpsValue> best;
  for (int i = 0; i < inst.machines(); ++i) {
    auto& slot = work[static_cast<std::size_t>(i)];
    EpsValue saved = slot;
    slot += inst.time(job, i);
    LoadVector final_loads = detail::window_final_loads(inst, job + 1, last, work);
    slot = std::move(saved);
    EpsValue cost = std::move(final_loads[static_cast<std::size_t>(i)]);
    if (!best || cost < *best) {
      best = cost;
      decision.machine = i;
    }
    decision.alternatives.emplace_back(i, std::move(cost));
  }
  decision.cost = *best;
  return decision;
}

// Myopic best response: argmin_i loads[i] + time(job, i).
inline Decision decide_greedy(const Instance& inst, int job, const LoadVector& loads) {
  return decide_window(inst, job, job, loads);
}

// Full backward induction over jobs [job, n-1].
inline Decision decide_perfect(const Instance& inst, int job, const LoadVector& loads,
                               const EngineLimits& limits = {}) {
  return decide_window(inst, job, inst.jobs() - 1, loads, limits);
}

// Truncated backward induction over jobs [job, min(job + k, n-1)].
inline Decision decide_lookahead(const Instance& inst, int job, const LoadVector& loads, int k,
                                 const EngineLimits& limits = {}) {
  if (k < 0) throw InvalidSpec("lookahead depth must be >= 0, got " + std::to_string(k));
  return decide_window(inst, job, std::min(job + k, inst.jobs() - 1), loads, limits);
}

namespace detail {

// Simple-minded rule within the game frame ending at `last`: anticipated
// load of machine i is loads[i] + time(job, i) + total time of successors in
// (job, last] whose minimum-processing-time machine is i (lowest index on
// ties, so each successor is assumed onto exactly one machine).
inline Decision decide_simple_minded_frame(const Instance& inst, int job, int last,
                                           const LoadVector& loads) {
  LoadVector assumed = zero_loads(inst.machines());
  for (int succ = job + 1; succ <= last; ++succ) {
    auto [t, i] = min_time(inst, succ);
    assumed[static_cast<std::size_t>(i)] += t;
  }
  Decision decision;
  std::optional<EpsValue> best;
  for (int i = 0; i < inst.machines(); ++i) {
    EpsValue cost = loads[static_cast<std::size_t>(i)] + inst.time(job, i) +
                    assumed[static_cast<std::size_t>(i)];
    if (!best || cost < *best) {
      best = cost;
      decision.machine = i;
    }
    decision.alternatives.emplace_back(i, std::move(cost));
  }
  decision.cost = *best;
  return decision;
}

}  // namespace detail

inline Decision decide_simple_minded(const Instance& inst, int job, const LoadVector& loads) {
  return detail::decide_simple_minded_frame(inst, job, inst.jobs() - 1, loads);
}

// One decision inside the subgame of jobs [.., frame_last]: lookahead
// windows truncate at the frame's last job, perfect induction runs to it,
// and simple-minded players only anticipate successors inside the frame.
inline Decision decide_in_frame(const Instance& inst, const RationalityModel& model, int job,
                                int frame_last, const LoadVector& loads,
                                const EngineLimits& limits = {}) {
  switch (model.kind) {
    case RationalityModel::Kind::Greedy:
      return decide_window(inst, job, job, loads, limits);
    case RationalityModel::Kind::Lookahead:
      return decide_window(inst, job, std::min(job + model.k, frame_last), loads, limits);
    case RationalityModel::Kind::Perfect:
      return decide_window(inst, job, frame_last, loads, limits);
    case RationalityModel::Kind::SimpleMinded:
      return detail::decide_simple_minded_frame(inst, job, frame_last, loads);
  }
  throw Error("unreachable rationality model");
}

// Sequential play of jobs [first, last] starting from `initial` loads, every
// job running the model's decision procedure against the frame. Returns the
// final loads; the per-job decisions are appended to *trace when given.
inline LoadVector play_range(const Instance& inst, int first, int last, LoadVector initial,
                             const RationalityModel& model, const EngineLimits& limits = {},
                             std::vector<DecisionRecord>* trace = nullptr) {
  if (first <= last && (first < 0 || last >= inst.jobs())) {
    throw IndexOutOfRange("play_range: jobs [" + std::to_string(first) + ", " +
                          std::to_string(last) + "] outside [0, " +
                          std::to_string(inst.jobs()) + ")");
  }
  if (static_cast<int>(initial.size()) != inst.machines()) {
    throw IndexOutOfRange("play_range: initial load vector has " +
                          std::to_string(initial.size()) + " entries, expected " +
                          std::to_string(inst.machines()));
  }
  for (int j = first; j <= last; ++j) {
    Decision d = decide_in_frame(inst, model, j, last, initial, limits);
    initial[static_cast<std::size_t>(d.machine)] += inst.time(j, d.machine);
    if (trace != nullptr) {
      trace->push_back(DecisionRecord{j, d.machine, std::move(d.cost), std::move(d.alternatives)});
    }
  }
  return initial;
}

// Full sequential play of the instance under the given rationality model,
// with the decision trace populated.
inline Schedule play(const Instance& inst, const RationalityModel& model,
                     const EngineLimits& limits = {}) {
  Schedule schedule;
  play_range(inst, 0, inst.jobs() - 1, zero_loads(inst.machines()), model, limits,
             &schedule.trace);
  schedule.sigma.reserve(schedule.trace.size());
  for (const auto& record : schedule.trace) schedule.sigma.push_back(record.chosen);
  return schedule;
}

}  // namespace seqsched
