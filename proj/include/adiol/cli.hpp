// Copyright 2026 The adiol Authors
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
#include <span>
#include <string>

#include "adiol/sim.hpp"

namespace adiol {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// Entry point of the `adiol` tool. argv[0] is the program name.
int run_cli(std::span<const std::string> argv, std::ostream& out,
            std::ostream& err);

// `key: value` lines, stable across runs.
void print_metrics(std::ostream& out, const Metrics& m);

}  // namespace adiol
