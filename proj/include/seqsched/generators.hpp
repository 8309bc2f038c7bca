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

#include "seqsched/errors.hpp"
#include "seqsched/instance.hpp"

namespace seqsched {

// Instance families:
//
//   table1              5 jobs x 2 machines, the classic perfect-rationality
//                       worst case with ratio 4
//   table4              2 jobs x 2 machines, 1-lookahead ratio 2
//   table5              the 4-machine member of the simple-minded family
//   simple-minded(m)    m jobs x m machines with ratio exactly m under
//                       simple-minded play
//   random(m, n)        seeded random instances for property ensembles
enum class Family { Table1, Table4, Table5, SimpleMindedFamily, Random };

enum class RandomDistribution {
  CentiUniform,  // constants i/100, i uniform in [1, 1000]; no eps part
  IntegerUniform,  // integer constants uniform in [1, 100]; no eps part
};

struct GeneratorSpec {
  Family family = Family::Random;
  int machines = 0;  // simple-minded family and random
  int jobs = 0;      // random only
  RandomDistribution distribution = RandomDistribution::CentiUniform;
  std::uint64_t seed = 0;  // random only
  // concretization value when a caller substitutes a number for eps;
  // generated instances carry symbolic eps coefficients by default
  Rational eps{1, 1000};
  // multiplier on the default infinity surrogate (tests double it to show
  // play does not depend on the choice)
  Rational surrogate_factor{1};
};

// Finite stand-in for the families' "infinite" entries: strictly larger than
// m * (largest finite constant part + 1), scaled well clear of the bound so
// no engine in scope can ever prefer it. nullopt cells mark the positions to
// fill.
inline EpsValue infinity_surrogate(int machines,
                                   const std::vector<std::vector<std::optional<EpsValue>>>& cells,
                                   const Rational& factor = Rational(1)) {
  Rational max_c;
  for (const auto& row : cells) {
    for (const auto& cell : row) {
      if (cell && cell->c > max_c) max_c = cell->c;
    }
  }
  return EpsValue(Rational(5 * machines) * (max_c + 1) * factor);
}

namespace detail {

inline Instance finish_with_surrogate(int machines,
                                      std::vector<std::vector<std::optional<EpsValue>>> cells,
                                      std::string name, const Rational& surrogate_factor) {
  const EpsValue surrogate = infinity_surrogate(machines, cells, surrogate_factor);
  std::vector<std::vector<EpsValue>> rows;
  rows.reserve(cells.size());
  for (auto& row : cells) {
    std::vector<EpsValue> out;
    out.reserve(row.size());
    for (auto& cell : row) out.push_back(cell ? std::move(*cell) : surrogate);
    rows.push_back(std::move(out));
  }
  return Instance(machines, std::move(rows), std::move(name));
}

// m jobs on m machines; job j's only good options are machine 1 (time
// 1-eps, like everyone else) and machine j+1, priced so that the assumed
// crowd on machine 1 pushes every job one machine further along the chain.
inline Instance simple_minded_family(int machines, const Rational& surrogate_factor,
                                     std::string name) {
  if (machines < 2) {
    throw InvalidSpec("simple-minded family needs at least 2 machines, got " +
                      std::to_string(machines));
  }
  const int m = machines;
  std::vector<std::vector<std::optional<EpsValue>>> cells(
      static_cast<std::size_t>(m), std::vector<std::optional<EpsValue>>(static_cast<std::size_t>(m)));
  for (int j = 1; j <= m; ++j) {
    cells[static_cast<std::size_t>(j - 1)][0] = EpsValue(1, -1);  // 1-eps on machine 1
    if (j >= 2) cells[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j - 1)] = EpsValue(1);
    if (j <= m - 1) {
      // (m+1-j) - (m+2-j)*eps on machine j+1
      cells[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j)] =
          EpsValue(m + 1 - j, -(m + 2 - j));
    }
  }
  return finish_with_surrogate(m, std::move(cells), std::move(name), surrogate_factor);
}

inline Rational draw(RandomDistribution distribution, std::mt19937_64& rng) {
  switch (distribution) {
    case RandomDistribution::CentiUniform:
      return Rational(static_cast<long long>(rng() % 1000 + 1), 100);
    case RandomDistribution::IntegerUniform:
      return Rational(static_cast<long long>(rng() % 100 + 1));
  }
  throw InvalidSpec("unknown random distribution");
}

}  // namespace detail

inline Instance gen(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Table1: {
      const EpsValue eps = EpsValue::eps();
      std::vector<std::vector<EpsValue>> rows = {
          {EpsValue(3, -11), eps},
          {eps, EpsValue(2, -9)},
          {eps, EpsValue(2, -8)},
          {EpsValue(1, -2), EpsValue(1, -2)},
          {EpsValue(2, -8), EpsValue(1, -2)},
      };
      return Instance(2, std::move(rows), "table1");
    }
    case Family::Table4: {
      std::vector<std::vector<EpsValue>> rows = {
          {EpsValue(1, 1), EpsValue(1)},
          {EpsValue(2), EpsValue(1, 1)},
      };
      return Instance(2, std::move(rows), "table4");
    }
    case Family::Table5:
      return detail::simple_minded_family(4, spec.surrogate_factor, "table5");
    case Family::SimpleMindedFamily:
      return detail::simple_minded_family(
          spec.machines, spec.surrogate_factor,
          "simple-minded-m" + std::to_string(spec.machines));
    case Family::Random: {
      if (spec.machines < 1) {
        throw InvalidSpec("random instance needs at least 1 machine, got " +
                          std::to_string(spec.machines));
      }
      if (spec.jobs < 0) {
        throw InvalidSpec("random instance needs a nonnegative job count, got " +
                          std::to_string(spec.jobs));
      }
      std::mt19937_64 rng(spec.seed);
      std::vector<std::vector<EpsValue>> rows(
          static_cast<std::size_t>(spec.jobs),
          std::vector<EpsValue>(static_cast<std::size_t>(spec.machines)));
      for (auto& row : rows) {
        for (auto& cell : row) cell = EpsValue(detail::draw(spec.distribution, rng));
      }
      return Instance(spec.machines, std::move(rows),
                      "random-m" + std::to_string(spec.machines) + "-n" +
                          std::to_string(spec.jobs) + "-s" + std::to_string(spec.seed));
    }
  }
  throw InvalidSpec("unknown generator family");
}

// Replace the symbolic eps by a concrete rational: every entry c + e*eps
// becomes the plain number c + e*eps0. eps0 must be small enough to keep all
// entries positive, or the resulting instance fails validation.
inline Instance substitute_eps(const Instance& inst, const Rational& eps0) {
  std::vector<std::vector<EpsValue>> rows;
  rows.reserve(static_cast<std::size_t>(inst.jobs()));
  for (int j = 0; j < inst.jobs(); ++j) {
    std::vector<EpsValue> row;
    row.reserve(static_cast<std::size_t>(inst.machines()));
    for (int i = 0; i < inst.machines(); ++i) {
      const EpsValue& v = inst.time(j, i);
      row.emplace_back(v.c + v.e * eps0);
    }
    rows.push_back(std::move(row));
  }
  return Instance(inst.machines(), std::move(rows), inst.name());
}

}  // namespace seqsched
