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

#include "adiol/errors.hpp"

#include <sstream>

namespace adiol {

namespace {

std::string singular_message(double thrust, double u_min) {
  std::ostringstream os;
  os << "thrust state chi7 = " << thrust << " is inside the guard |chi7| < "
     << u_min << "; decoupling matrix is singular";
  return os.str();
}

}  // namespace

SingularThrust::SingularThrust(double thrust, double u_min)
    : Error(singular_message(thrust, u_min)), thrust_(thrust) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

SimulationAborted::SimulationAborted(std::size_t step, double t,
                                     const std::string& cause)
    : Error("simulation aborted at step " + std::to_string(step) +
            " (t = " + std::to_string(t) + "): " + cause),
      step_(step),
      t_(t) {}

}  // namespace adiol
