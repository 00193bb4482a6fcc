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

#include "adiol/types.hpp"

namespace adiol {

struct PlantParams {
  double m = 1.0;     // kg
  double J = 0.05;    // kg m^2
  double ell = 0.5;   // arm length, m
  double g = 9.81;    // m/s^2

  // Throws ValidationError naming the first violated bound.
  void validate() const;
};

struct MotorForces {
  double f1;
  double f2;
};

// Right-hand side of the planar bicopter equations of motion.
PlantState plant_deriv(const PlantState& x, const PlantInput& u,
                       const PlantParams& p);

// chi_dot = F(chi) + G(chi) w for the plant extended with (u1, u1_dot).
ExtendedState extended_deriv(const ExtendedState& chi, const ExtendedInput& w,
                             const PlantParams& p);

// Drift and input fields of extended_deriv, exposed for the Lie oracle.
ExtendedState extended_drift(const ExtendedState& chi, const PlantParams& p);
Mat8x2 extended_input_map(const PlantParams& p);

// Splits (u1, u2) into the two rotor forces.
MotorForces motor_forces(const PlantInput& u, const PlantParams& p);
PlantInput combine_forces(const MotorForces& f, const PlantParams& p);

}  // namespace adiol
