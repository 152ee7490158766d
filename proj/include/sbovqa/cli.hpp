// Copyright 2026 The sbovqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sbovqa/benchmark.hpp"
#include "sbovqa/config.hpp"

namespace sbovqa {

/// Builds the variational problem described by the [problem] table.
/// Validation failures are reported together with config line references.
Problem problem_from_config(const ConfigFile &cfg);

SboConfig sbo_config_from(const ConfigFile &cfg);
SpsaConfig spsa_config_from(const ConfigFile &cfg);
QuasiNewtonConfig qn_config_from(const ConfigFile &cfg);

/// Experiment-runner entry point. args excludes the program name. Subcommands:
/// optimize, benchmark, sweep-patch-size, bound, fit, true-optimum. Writes
/// result files atomically, streams human-readable progress to `out`, and on
/// failure prints a one-line JSON error report to `err` and returns nonzero.
int cmd_dispatch(std::vector<std::string> args, std::ostream &out,
                 std::ostream &err);

} // namespace sbovqa
