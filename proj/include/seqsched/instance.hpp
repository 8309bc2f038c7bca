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

#include <cassert>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seqsched/eps_value.hpp"
#include "seqsched/errors.hpp"

namespace seqsched {

// A scheduling game: n jobs choosing among m machines, job j taking
// time(j, i) units on machine i. Jobs play in index order. Immutable after
// construction; every processing time is strictly positive in the eps order
// (entries like "0+1*eps" are allowed).
//
// Internally everything is 0-based; rendered output (traces, CLI, CSV) uses
// 1-based job and machine numbers.
class Instance {
 public:
  Instance(int machines, std::vector<std::vector<EpsValue>> times, std::string name = {})
      : name_(std::move(name)), machines_(machines), times_(std::move(times)) {
    validate();
  }

  int machines() const { return machines_; }
  int jobs() const { return static_cast<int>(times_.size()); }
  const std::string& name() const { return name_; }

  const EpsValue& time(int job, int machine) const {
    assert(job >= 0 && job < jobs() && machine >= 0 && machine < machines_);
    return times_[static_cast<std::size_t>(job)][static_cast<std::size_t>(machine)];
  }
  const std::vector<EpsValue>& row(int job) const {
    assert(job >= 0 && job < jobs());
    return times_[static_cast<std::size_t>(job)];
  }

  // File format:
  //   { "name": "...", "machines": m, "jobs": [ [t_1, ..., t_m], ... ] }
  // where each t is a number, a string like "3/4", or {"c": ..., "e": ...}.
  // Rows are in play order.
  static Instance from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("instance: expected a JSON object");
    if (!j.contains("machines")) throw ParseError("machines: missing");
    if (!j["machines"].is_number_integer() && !j["machines"].is_number_unsigned()) {
      throw ParseError("machines: expected an integer");
    }
    const auto m = j["machines"].get<long long>();
    if (m < 1 || m > std::numeric_limits<int>::max()) {
      throw InvalidInstance("machines: must be at least 1, got " + std::to_string(m));
    }
    if (!j.contains("jobs") || !j["jobs"].is_array()) {
      throw ParseError("jobs: missing or not an array");
    }
    std::string name;
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw ParseError("name: expected a string");
      name = j["name"].get<std::string>();
    }
    std::vector<std::vector<EpsValue>> times;
    times.reserve(j["jobs"].size());
    int row_index = 0;
    for (const auto& row : j["jobs"]) {
      const std::string where = "jobs[" + std::to_string(row_index) + "]";
      if (!row.is_array()) throw ParseError(where + ": expected an array");
      std::vector<EpsValue> entries;
      entries.reserve(row.size());
      int col = 0;
      for (const auto& cell : row) {
        entries.push_back(eps_value_from_json(cell, where + "[" + std::to_string(col) + "]"));
        ++col;
      }
      times.push_back(std::move(entries));
      ++row_index;
    }
    return Instance(static_cast<int>(m), std::move(times), std::move(name));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    if (!name_.empty()) j["name"] = name_;
    j["machines"] = machines_;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : times_) {
      nlohmann::json cells = nlohmann::json::array();
      for (const auto& v : row) cells.push_back(eps_value_to_json(v));
      rows.push_back(std::move(cells));
    }
    j["jobs"] = std::move(rows);
    return j;
  }

  static Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(path + ": " + ex.what());
    }
    try {
      return from_json(j);
    } catch (const Error& ex) {
      throw ParseError(path + ": " + ex.what());
    }
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open file for writing");
    out << to_json().dump(2) << '\n';
  }

  static EpsValue eps_value_from_json(const nlohmann::json& v, const std::string& where) {
    try {
      if (v.is_object()) {
        EpsValue out;
        if (v.contains("c")) out.c = rational_from_json(v["c"]);
        if (v.contains("e")) out.e = rational_from_json(v["e"]);
        return out;
      }
      if (v.is_string()) return EpsValue::parse(v.get<std::string>());
      if (v.is_number_integer() || v.is_number_unsigned() || v.is_number_float()) {
        return EpsValue(rational_from_json(v));
      }
    } catch (const Error& ex) {
      throw ParseError(where + ": " + ex.what());
    }
    throw ParseError(where + ": expected number, string or {\"c\": ..., \"e\": ...}");
  }

  static nlohmann::json eps_value_to_json(const EpsValue& v) {
    if (v.e.is_zero()) return rational_to_json(v.c);
    return nlohmann::json{{"c", rational_to_json(v.c)}, {"e", rational_to_json(v.e)}};
  }

 private:
  static Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
    if (v.is_number_float()) {
      // shortest round-trip decimal keeps the value the file's author wrote
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
      return Rational::from_decimal(std::string_view(buf, res.ptr - buf));
    }
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ParseError("expected number or \"p/q\" string");
  }

  static nlohmann::json rational_to_json(const Rational& r) {
    constexpr long long kSafe = 1ll << 53;
    if (r.is_integer() && r.num() > -kSafe && r.num() < kSafe) {
      return static_cast<long long>(r.num());
    }
    return r.str();
  }

  void validate() const {
    if (machines_ < 1) {
      throw InvalidInstance("machines: must be at least 1, got " + std::to_string(machines_));
    }
    for (std::size_t jj = 0; jj < times_.size(); ++jj) {
      if (static_cast<int>(times_[jj].size()) != machines_) {
        throw InvalidInstance("jobs[" + std::to_string(jj) + "]: expected " +
                              std::to_string(machines_) + " processing times, got " +
                              std::to_string(times_[jj].size()));
      }
      for (std::size_t ii = 0; ii < times_[jj].size(); ++ii) {
        if (!times_[jj][ii].is_positive()) {
          throw InvalidInstance("jobs[" + std::to_string(jj) + "][" + std::to_string(ii) +
                                "]: processing time must be positive, got " +
                                times_[jj][ii].str());
        }
      }
    }
  }

  std::string name_;
  int machines_;
  std::vector<std::vector<EpsValue>> times_;
};

// One player's recorded computation: the machine it chose, the cost it
// anticipated, and the anticipated cost of every alternative (machines in
// ascending index order). All indices 0-based in memory.
struct DecisionRecord {
  int job = 0;
  int chosen = 0;
  EpsValue anticipated_cost;
  std::vector<std::pair<int, EpsValue>> alternatives;
};

// The decision vector sigma plus the per-step trace of the play that
// produced it (empty trace for witness schedules).
struct Schedule {
  std::vector<int> sigma;  // sigma[j] = machine chosen by job j
  std::vector<DecisionRecord> trace;
};

// Per-machine accumulated load.
using LoadVector = std::vector<EpsValue>;

inline LoadVector zero_loads(int machines) {
  return LoadVector(static_cast<std::size_t>(machines));
}

// Maximum load over all machines; 0 for an empty vector.
inline EpsValue makespan(const LoadVector& loads) {
  EpsValue best;
  for (const auto& v : loads) {
    if (v > best) best = v;
  }
  return best;
}

// Loads after the first `upto` jobs of `sigma` are placed on top of
// `initial`: entry i is initial[i] plus the sum of time(j, i) over j < upto
// with sigma[j] == i.
inline LoadVector loads_after(const Instance& inst, const std::vector<int>& sigma, int upto,
                              const LoadVector& initial) {
  if (upto < 0 || upto > inst.jobs()) {
    throw IndexOutOfRange("loads_after: prefix length " + std::to_string(upto) +
                          " outside [0, " + std::to_string(inst.jobs()) + "]");
  }
  if (static_cast<int>(sigma.size()) < upto) {
    throw IndexOutOfRange("loads_after: schedule covers only " +
                          std::to_string(sigma.size()) + " of " + std::to_string(upto) +
                          " jobs");
  }
  if (static_cast<int>(initial.size()) != inst.machines()) {
    throw IndexOutOfRange("loads_after: initial load vector has " +
                          std::to_string(initial.size()) + " entries, expected " +
                          std::to_string(inst.machines()));
  }
  LoadVector loads = initial;
  for (int j = 0; j < upto; ++j) {
    const int i = sigma[static_cast<std::size_t>(j)];
    if (i < 0 || i >= inst.machines()) {
      throw IndexOutOfRange("loads_after: sigma[" + std::to_string(j) + "] = " +
                            std::to_string(i) + " is not a machine index");
    }
    loads[static_cast<std::size_t>(i)] += inst.time(j, i);
  }
  return loads;
}

inline LoadVector loads_after(const Instance& inst, const std::vector<int>& sigma, int upto) {
  return loads_after(inst, sigma, upto, zero_loads(inst.machines()));
}

inline LoadVector loads_after(const Instance& inst, const Schedule& schedule) {
  return loads_after(inst, schedule.sigma, inst.jobs());
}

// Minimum processing time of job j over all machines, together with the
// lowest-index machine achieving it.
inline std::pair<EpsValue, int> min_time(const Instance& inst, int job) {
  if (job < 0 || job >= inst.jobs()) {
    throw IndexOutOfRange("min_time: job " + std::to_string(job) + " outside [0, " +
                          std::to_string(inst.jobs()) + ")");
  }
  int best = 0;
  for (int i = 1; i < inst.machines(); ++i) {
    if (inst.time(job, i) < inst.time(job, best)) best = i;
  }
  return {inst.time(job, best), best};
}

// Sum of the minimum processing times of the first `count` jobs.
inline EpsValue total_min_time(const Instance& inst, int count) {
  if (count < 0 || count > inst.jobs()) {
    throw IndexOutOfRange("total_min_time: prefix length " + std::to_string(count) +
                          " outside [0, " + std::to_string(inst.jobs()) + "]");
  }
  EpsValue sum;
  for (int j = 0; j < count; ++j) sum += min_time(inst, j).first;
  return sum;
}

inline EpsValue total_min_time(const Instance& inst) { return total_min_time(inst, inst.jobs()); }

}  // namespace seqsched
