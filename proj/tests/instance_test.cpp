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

#include "seqsched/instance.hpp"

#include <cstdio>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "seqsched/generators.hpp"

using namespace seqsched;
using seqsched::test::ev;
using seqsched::test::random_instance;

namespace {

Instance table1() { return gen({.family = Family::Table1}); }
Instance table4() { return gen({.family = Family::Table4}); }
Instance table5() { return gen({.family = Family::Table5}); }

}  // namespace

TEST_CASE("loads_after on the five-job instance") {
  const Instance inst = table1();
  const std::vector<int> sigma{0, 1, 0, 1, 1};
  const LoadVector final_loads = loads_after(inst, sigma, 5);
  CHECK(final_loads[0] == ev(3, -10));
  CHECK(final_loads[1] == ev(4, -13));
  CHECK(makespan(final_loads) == ev(4, -13));
}

TEST_CASE("loads_after with an empty prefix keeps the initial loads") {
  const Instance inst = table4();
  const LoadVector initial{ev(5, -1), ev(0, 2)};
  CHECK(loads_after(inst, {0, 1}, 0, initial) == initial);
}

TEST_CASE("loads_after on the two-job instance") {
  const Instance inst = table4();
  const LoadVector loads = loads_after(inst, {1, 0}, 2);
  CHECK(loads[0] == ev(2, 0));
  CHECK(loads[1] == ev(1, 0));
  CHECK(makespan(loads) == ev(2, 0));
}

TEST_CASE("makespan") {
  CHECK(makespan({ev(3, -10), ev(4, -13)}) == ev(4, -13));
  CHECK(makespan(LoadVector(3)) == EpsValue{});
  CHECK(makespan({}) == EpsValue{});
  CHECK(makespan({ev(2, 0), ev(1, 0)}) == ev(2, 0));
}

TEST_CASE("min_time") {
  const Instance t1 = table1();
  auto [time1, machine1] = min_time(t1, 0);
  CHECK(time1 == ev(0, 1));
  CHECK(machine1 == 1);

  // identical times tie to the lowest machine index
  const Instance flat(3, {{ev(2, 0), ev(2, 0), ev(2, 0)}});
  CHECK(min_time(flat, 0).second == 0);

  const Instance t5 = table5();
  auto [time2, machine2] = min_time(t5, 1);
  CHECK(time2 == ev(1, -1));
  CHECK(machine2 == 0);
}

TEST_CASE("load prefix properties") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, 2 + static_cast<int>(rng() % 3), 8);
    const int n = inst.jobs();
    std::vector<int> sigma;
    for (int j = 0; j < n; ++j) sigma.push_back(static_cast<int>(rng() % inst.machines()));

    EpsValue previous_makespan;
    EpsValue total;
    for (int l = 1; l <= n; ++l) {
      const LoadVector before = loads_after(inst, sigma, l - 1);
      const LoadVector after = loads_after(inst, sigma, l);
      // the step changes only the chosen machine, by exactly that job's time
      for (int i = 0; i < inst.machines(); ++i) {
        const auto iu = static_cast<std::size_t>(i);
        if (i == sigma[static_cast<std::size_t>(l - 1)]) {
          CHECK(after[iu] - before[iu] == inst.time(l - 1, i));
        } else {
          CHECK(after[iu] == before[iu]);
        }
      }
      CHECK(makespan(after) >= previous_makespan);
      previous_makespan = makespan(after);
    }
    // mass conservation
    const LoadVector final_loads = loads_after(inst, sigma, n);
    EpsValue lhs;
    for (const auto& v : final_loads) lhs += v;
    for (int j = 0; j < n; ++j) total += inst.time(j, sigma[static_cast<std::size_t>(j)]);
    CHECK(lhs == total);
  }
}

TEST_CASE("loads_after rejects bad indices") {
  const Instance inst = table4();
  CHECK_THROWS_AS(loads_after(inst, {0, 1}, 3), IndexOutOfRange);
  CHECK_THROWS_AS(loads_after(inst, {0}, 2), IndexOutOfRange);
  CHECK_THROWS_AS(loads_after(inst, {0, 7}, 2), IndexOutOfRange);
  CHECK_THROWS_AS(loads_after(inst, {0, 1}, 2, LoadVector(3)), IndexOutOfRange);
  CHECK_THROWS_AS(min_time(inst, 2), IndexOutOfRange);
  CHECK_THROWS_AS(total_min_time(inst, -1), IndexOutOfRange);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(0, {}), InvalidInstance);
  CHECK_THROWS_AS(Instance(2, {{ev(1, 0)}}), InvalidInstance);
  CHECK_THROWS_AS(Instance(2, {{ev(1, 0), ev(0, 0)}}), InvalidInstance);
  CHECK_THROWS_AS(Instance(2, {{ev(1, 0), ev(0, -1)}}), InvalidInstance);
  CHECK_THROWS_WITH_AS(Instance(2, {{ev(1, 0), ev(-1, 0)}}),
                       doctest::Contains("jobs[0][1]"), InvalidInstance);
  // eps-only entries are positive and allowed
  CHECK_NOTHROW(Instance(2, {{ev(0, 1), ev(1, 0)}}));
}

TEST_CASE("instance json round trip") {
  const auto text = R"({
    "name": "mixed",
    "machines": 2,
    "jobs": [
      [1, "1/2"],
      [0.25, {"c": "3", "e": "-11"}],
      [{"c": 0, "e": 1}, 7]
    ]
  })";
  const Instance inst = Instance::from_json(nlohmann::json::parse(text));
  CHECK(inst.name() == "mixed");
  CHECK(inst.jobs() == 3);
  CHECK(inst.time(0, 0) == ev(1, 0));
  CHECK(inst.time(0, 1) == EpsValue(Rational(1, 2)));
  CHECK(inst.time(1, 0) == EpsValue(Rational(1, 4)));
  CHECK(inst.time(1, 1) == ev(3, -11));
  CHECK(inst.time(2, 0) == ev(0, 1));
  CHECK(inst.time(2, 1) == ev(7, 0));

  const Instance back = Instance::from_json(inst.to_json());
  CHECK(back.name() == inst.name());
  REQUIRE(back.jobs() == inst.jobs());
  for (int j = 0; j < inst.jobs(); ++j) {
    for (int i = 0; i < inst.machines(); ++i) CHECK(back.time(j, i) == inst.time(j, i));
  }
}

TEST_CASE("instance json diagnostics name the offending field") {
  CHECK_THROWS_WITH_AS(Instance::from_json(nlohmann::json::parse(R"({"jobs": []})")),
                       doctest::Contains("machines"), ParseError);
  CHECK_THROWS_WITH_AS(
      Instance::from_json(nlohmann::json::parse(R"({"machines": 2, "jobs": [[1, "x"]]})")),
      doctest::Contains("jobs[0][1]"), ParseError);
  CHECK_THROWS_AS(Instance::from_json(nlohmann::json::parse(R"({"machines": 2})")), ParseError);
  CHECK_THROWS_AS(Instance::from_json(nlohmann::json::parse("[]")), ParseError);
}

TEST_CASE("instance file round trip") {
  const Instance inst = table1();
  const std::string path = "test_instance_roundtrip.json";
  inst.save(path);
  const Instance back = Instance::load(path);
  CHECK(back.name() == "table1");
  REQUIRE(back.jobs() == 5);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 2; ++i) CHECK(back.time(j, i) == inst.time(j, i));
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(Instance::load("does_not_exist.json"), ParseError);
}

TEST_CASE("generated instances round trip through json") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, 1 + static_cast<int>(rng() % 4), 10);
    const Instance back = Instance::from_json(inst.to_json());
    REQUIRE(back.jobs() == inst.jobs());
    REQUIRE(back.machines() == inst.machines());
    for (int j = 0; j < inst.jobs(); ++j) {
      for (int i = 0; i < inst.machines(); ++i) CHECK(back.time(j, i) == inst.time(j, i));
    }
  }
}
