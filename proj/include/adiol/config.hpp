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

#include <string>
#include <string_view>
#include <vector>

#include "adiol/sim.hpp"

namespace adiol {

// Parses a flat `section.key = value` document ('#' starts a comment).
// Missing keys keep their defaults; unknown keys are rejected with
// ParseError; the result is validated (ValidationError).
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::string& path);

// Keys accepted by parse_config, for documentation and error messages.
const std::vector<std::string>& config_keys();

// Parses "-4.5", "-1+2i" or "-1-2i".
Pole parse_pole(std::string_view token);

}  // namespace adiol
