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

#include <stdexcept>
#include <string>

namespace seqsched {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (numbers, instance files).
struct ParseError : Error {
  using Error::Error;
};

// An instance violates a structural constraint (nonpositive processing
// time, wrong row width, machine count below 1).
struct InvalidInstance : Error {
  using Error::Error;
};

// A job/machine index or prefix length is outside the valid range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

// limit_ratio on a denominator whose constant part is zero: the ratio has
// no finite limit, so we refuse rather than guess.
struct DenominatorVanishes : Error {
  using Error::Error;
};

// A computation would exceed its configured exploration budget
// (game-tree window too deep, branch-and-bound node budget exhausted).
struct SizeLimit : Error {
  using Error::Error;
};

// An analysis defined only for two machines was asked about m != 2.
struct NotTwoMachines : Error {
  using Error::Error;
};

// The breakpoint scan walked past the last job. Possible for schedules
// that were not produced by 1-lookahead play; reported, never truncated.
struct ScanRanOffEnd : Error {
  using Error::Error;
};

// SPoA is undefined when the optimal makespan has constant part zero.
struct DegenerateOpt : Error {
  using Error::Error;
};

// Invalid generator specification.
struct InvalidSpec : Error {
  using Error::Error;
};

// Verification suite name not recognized.
struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace seqsched
