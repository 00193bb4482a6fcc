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
#include <string>
#include <vector>

#include "adiol/sim.hpp"

namespace adiol {

// Column names of the telemetry CSV, in file order.
const std::vector<std::string>& csv_columns();

// Header row plus one row per record. Values use the shortest text that
// parses back to the same double, so a round trip is bit-exact.
void write_csv(std::ostream& out, const TimeSeries& ts);
void write_csv_file(const std::string& path, const TimeSeries& ts);

// Throws ParseError on a malformed header or row.
TimeSeries read_csv(std::istream& in);
TimeSeries read_csv_file(const std::string& path);

}  // namespace adiol
