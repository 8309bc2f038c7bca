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

#include <random>
#include <vector>

#include "seqsched/generators.hpp"
#include "seqsched/instance.hpp"
#include "seqsched/rational.hpp"

namespace seqsched::test {

inline EpsValue ev(long long c, long long e) { return EpsValue(c, e); }

inline Rational random_rational(std::mt19937_64& rng) {
  const long long num = static_cast<long long>(rng() % 41) - 20;
  const long long den = static_cast<long long>(rng() % 12) + 1;
  return Rational(num, den);
}

inline EpsValue random_eps_value(std::mt19937_64& rng) {
  return EpsValue(random_rational(rng), random_rational(rng));
}

inline Instance random_instance(std::mt19937_64& rng, int machines, int max_jobs) {
  GeneratorSpec spec;
  spec.family = Family::Random;
  spec.machines = machines;
  spec.jobs = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_jobs));
  spec.seed = rng();
  return gen(spec);
}

}  // namespace seqsched::test
