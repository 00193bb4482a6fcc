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

#include "adiol/model.hpp"

#include <cmath>
#include <string>

#include "adiol/errors.hpp"

namespace adiol {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be > 0 (got " +
                          std::to_string(value) + ")");
  }
}

}  // namespace

void PlantParams::validate() const {
  require_positive(m, "plant.m");
  require_positive(J, "plant.J");
  require_positive(ell, "plant.ell");
  require_positive(g, "plant.g");
}

PlantState plant_deriv(const PlantState& x, const PlantInput& u,
                       const PlantParams& p) {
  const double s = std::sin(x(2));
  const double c = std::cos(x(2));
  PlantState dx;
  dx << x(3), x(4), x(5), -u(0) * s / p.m, -p.g + u(0) * c / p.m, u(1) / p.J;
  return dx;
}

ExtendedState extended_drift(const ExtendedState& chi, const PlantParams& p) {
  const double s = std::sin(chi(2));
  const double c = std::cos(chi(2));
  ExtendedState f;
  f << chi(3), chi(4), chi(5), -s * chi(6) / p.m, -p.g + c * chi(6) / p.m, 0.0,
      chi(7), 0.0;
  return f;
}

Mat8x2 extended_input_map(const PlantParams& p) {
  Mat8x2 G = Mat8x2::Zero();
  G(5, 1) = 1.0 / p.J;
  G(7, 0) = 1.0;
  return G;
}

ExtendedState extended_deriv(const ExtendedState& chi, const ExtendedInput& w,
                             const PlantParams& p) {
  ExtendedState d = extended_drift(chi, p);
  // G only has two nonzero entries.
  d(5) += w(1) / p.J;
  d(7) += w(0);
  return d;
}

MotorForces motor_forces(const PlantInput& u, const PlantParams& p) {
  const double diff = u(1) / p.ell;
  return {0.5 * (u(0) - diff), 0.5 * (u(0) + diff)};
}

PlantInput combine_forces(const MotorForces& f, const PlantParams& p) {
  return PlantInput(f.f1 + f.f2, p.ell * (f.f2 - f.f1));
}

}  // namespace adiol
