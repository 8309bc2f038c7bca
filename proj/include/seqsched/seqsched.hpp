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

#include "seqsched/analysis.hpp"
#include "seqsched/engines.hpp"
#include "seqsched/eps_value.hpp"
#include "seqsched/errors.hpp"
#include "seqsched/generators.hpp"
#include "seqsched/instance.hpp"
#include "seqsched/optimal.hpp"
#include "seqsched/oracles.hpp"
#include "seqsched/parallel.hpp"
#include "seqsched/rational.hpp"
#include "seqsched/suites.hpp"
