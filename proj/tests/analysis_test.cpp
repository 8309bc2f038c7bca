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

#include "seqsched/analysis.hpp"

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

TEST_CASE("spoa reports") {
  const SpoaReport r4 = spoa(table4(), RationalityModel::lookahead(1));
  CHECK(r4.equilibrium_makespan == ev(2, 0));
  CHECK(r4.opt_makespan == ev(1, 1));
  CHECK(r4.ratio_limit == Rational(2));
  REQUIRE(r4.bound.has_value());
  CHECK(*r4.bound == Rational(2));
  CHECK(r4.bound_satisfied);

  const SpoaReport r5 = spoa(table5(), RationalityModel::simple_minded());
  CHECK(r5.ratio_limit == Rational(4));
  CHECK(*r5.bound == Rational(4));
  CHECK(r5.bound_satisfied);

  const SpoaReport r1 = spoa(table1(), RationalityModel::perfect());
  CHECK(r1.ratio_limit == Rational(4));
  CHECK(!r1.bound.has_value());
  CHECK(r1.bound_satisfied);
}

TEST_CASE("spoa bounds by model") {
  CHECK(*spoa_bound(RationalityModel::lookahead(1), 2, 5) == Rational(2));
  CHECK(*spoa_bound(RationalityModel::lookahead(2), 2, 5) == Rational(6));
  CHECK(*spoa_bound(RationalityModel::lookahead(3), 2, 5) == Rational(14));
  CHECK(*spoa_bound(RationalityModel::lookahead(0), 2, 5) == Rational(2));
  // min(m k 2^k + m, m + n 2^k)
  CHECK(*spoa_bound(RationalityModel::lookahead(1), 3, 10) == Rational(9));
  CHECK(*spoa_bound(RationalityModel::lookahead(2), 4, 3) == Rational(16));  // 4+3*4 < 4*2*4+4
  CHECK(*spoa_bound(RationalityModel::lookahead(0), 5, 9) == Rational(5));
  CHECK(*spoa_bound(RationalityModel::greedy(), 7, 2) == Rational(7));
  CHECK(*spoa_bound(RationalityModel::simple_minded(), 3, 2) == Rational(3));
  CHECK(!spoa_bound(RationalityModel::perfect(), 2, 5).has_value());
}

TEST_CASE("spoa rejects a degenerate optimum") {
  // every processing time is a pure eps term, so the optimal makespan has
  // constant part zero
  const Instance inst(2, {{ev(0, 1), ev(0, 2)}, {ev(0, 2), ev(0, 1)}}, "all-eps");
  CHECK_THROWS_AS(spoa(inst, RationalityModel::greedy()), DegenerateOpt);
}

TEST_CASE("spoa ratio is exact") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = random_instance(rng, 2 + static_cast<int>(rng() % 2), 7);
    const SpoaReport report = spoa(inst, RationalityModel::greedy());
    CHECK(report.ratio_limit * report.opt_makespan.c == report.equilibrium_makespan.c);
  }
}

TEST_CASE("breakpoints of the two-job instance") {
  const Instance inst = table4();
  const Schedule sched = play(inst, RationalityModel::lookahead(1));
  const Breakpoints bp = breakpoints(inst, sched.sigma);
  CHECK(bp.values == std::vector<int>{0, 1, 2});
}

TEST_CASE("breakpoints of an empty instance") {
  const Instance inst(2, {});
  CHECK(breakpoints(inst, {}).values == std::vector<int>{0});
}

TEST_CASE("breakpoints with an immediate scan hit") {
  // job 1 takes the machine the first comparison favors, so n_1 = 1
  const Instance lone(2, {{ev(1, 0), ev(2, 0)}});
  CHECK(breakpoints(lone, {0}).values == std::vector<int>{0, 1});

  const Instance inst(2, {{ev(1, 0), ev(2, 0)}, {ev(3, 0), ev(1, 0)}});
  const Schedule sched = play(inst, RationalityModel::lookahead(1));
  const Breakpoints bp = breakpoints(inst, sched.sigma);
  CHECK(bp.values[1] == 1);
  CHECK(bp.values.back() == 2);
}

TEST_CASE("breakpoints errors") {
  const Instance three(3, {{ev(1, 0), ev(1, 0), ev(1, 0)}});
  CHECK_THROWS_AS(breakpoints(three, {0}), NotTwoMachines);
  const Instance inst = table4();
  CHECK_THROWS_AS(breakpoints(inst, {0}), IndexOutOfRange);
  // machine 1 is favored for the single job but the schedule put it on 2
  const Instance lone(2, {{ev(1, 0), ev(2, 0)}});
  CHECK_THROWS_AS(breakpoints(lone, {1}), ScanRanOffEnd);
}

TEST_CASE("claim 1 on the two-job instance") {
  const Claim1Result result = check_claim1(table4());
  CHECK(result.ok);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.rows[1].position == 1);
  CHECK(result.rows[1].prefix_makespan == ev(1, 0));
  CHECK(result.rows[1].min_time_sum == ev(1, 0));
  CHECK(result.rows[2].position == 2);
  CHECK(result.rows[2].prefix_makespan == ev(2, 0));
  CHECK(result.rows[2].min_time_sum == ev(2, 1));
}

TEST_CASE("claim 1 is vacuous on an empty instance") {
  const Claim1Result result = check_claim1(Instance(2, {}));
  CHECK(result.ok);
  CHECK(result.rows.size() == 1);
}

TEST_CASE("lemma 1 and claim 1 on a random ensemble") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = random_instance(rng, 2, 10);
    CHECK(check_lemma1(inst));
    CHECK(check_claim1(inst).ok);
  }
}

TEST_CASE("lemma 1 examples") {
  CHECK(check_lemma1(table4()));  // 2 <= 2+eps
  const Instance single(2, {{ev(4, 0), ev(9, 0)}});
  CHECK(check_lemma1(single));  // equality: makespan = p_1
  CHECK_THROWS_AS(check_lemma1(Instance(3, {})), NotTwoMachines);
}

TEST_CASE("delta-l estimate") {
  const Instance inst = table4();
  const RationalityModel model = RationalityModel::lookahead(1);

  // empty window: the makespan never moves
  CHECK(delta_l_estimate(inst, 1, 0, model, 16, 99) == EpsValue{});

  // single job: some sampled start yields at least the zero-start increase
  const EpsValue single = delta_l_estimate(inst, 1, 1, model, 16, 99);
  CHECK(single >= ev(1, 1));  // job 2 alone from zero loads costs min(2, 1+eps)

  // the zero vector is always sampled
  const EpsValue whole = delta_l_estimate(inst, 0, 1, model, 0, 99);
  const EpsValue from_zero =
      makespan(play_range(inst, 0, 1, zero_loads(2), model));
  CHECK(whole >= from_zero);

  // adding samples never decreases the estimate
  const EpsValue few = delta_l_estimate(inst, 0, 1, model, 4, 7);
  const EpsValue more = delta_l_estimate(inst, 0, 1, model, 32, 7);
  CHECK(more >= few);
}

TEST_CASE("anticipated-load profile on the four-machine instance") {
  const Instance inst = table5();
  const MonotonicityResult result = check_simple_minded_monotonicity(inst);
  CHECK(result.ok);
  CHECK(result.sigma == std::vector<int>{1, 2, 3, 0});
  REQUIRE(result.profile.size() == 5);
  // before anyone moves, machine 1 anticipates all four jobs at 1-eps
  CHECK(result.profile[0] == ev(4, -4));
  // the play ends at the realized makespan
  CHECK(result.profile[4] == ev(4, -5));
}

TEST_CASE("anticipated-load profile never increases on random instances") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = random_instance(rng, 2 + static_cast<int>(rng() % 4), 12);
    CHECK(check_simple_minded_monotonicity(inst).ok);
  }
}

TEST_CASE("theorem bound batches") {
  const std::vector<Instance> batch{table4()};
  const BoundCheckSummary summary = check_theorem_bounds(batch, RationalityModel::lookahead(1));
  CHECK(summary.all_satisfied);
  CHECK(summary.errors.empty());
  REQUIRE(summary.max_ratio.has_value());
  CHECK(*summary.max_ratio == Rational(2));

  std::mt19937_64 rng(53);
  std::vector<Instance> random_batch;
  for (int trial = 0; trial < 20; ++trial) random_batch.push_back(random_instance(rng, 2, 8));
  const BoundCheckSummary k2 = check_theorem_bounds(random_batch, RationalityModel::lookahead(2));
  CHECK(k2.all_satisfied);
  for (const auto& report : k2.reports) CHECK(report.ratio_limit <= Rational(6));
}

TEST_CASE("simple-minded family meets its bound with equality") {
  for (int m = 2; m <= 6; ++m) {
    const Instance inst = gen({.family = Family::SimpleMindedFamily, .machines = m});
    const SpoaReport report = spoa(inst, RationalityModel::simple_minded());
    CHECK(report.ratio_limit == Rational(m));
    CHECK(*report.bound == Rational(m));
    CHECK(report.bound_satisfied);
  }
}

TEST_CASE("csv rendering") {
  CHECK(spoa_csv_header() ==
        "instance,model,k,m,n,eq_c,eq_eps,opt_c,opt_eps,ratio,bound,ok");
  const SpoaReport r5 = spoa(table5(), RationalityModel::simple_minded());
  CHECK(spoa_csv_row(r5) == "table5,simple-minded,,4,4,4,-5,1,0,4,4,ok");
  const SpoaReport r4 = spoa(table4(), RationalityModel::lookahead(1));
  CHECK(spoa_csv_row(r4) == "table4,lookahead,1,2,2,2,0,1,1,2,2,ok");

  SpoaReport crafted = r4;
  crafted.instance = "a,b\"c";
  crafted.bound = Rational(1);
  crafted.bound_satisfied = false;
  const std::string row = spoa_csv_row(crafted);
  CHECK(row.substr(0, 8) == "\"a,b\"\"c\"");
  CHECK(row.find("violated") != std::string::npos);
}
