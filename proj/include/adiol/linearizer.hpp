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

#include "adiol/model.hpp"
#include "adiol/types.hpp"

namespace adiol {

// Estimated inverse mass and inverse inertia, Theta_hat = (1/m_hat, 1/J_hat).
struct ParamEstimate {
  Vec2 theta = Vec2(1.0, 20.0);

  double mass() const { return 1.0 / theta(0); }
  double inertia() const { return 1.0 / theta(1); }

  static ParamEstimate from_mass_inertia(double m, double J) {
    return ParamEstimate{Vec2(1.0 / m, 1.0 / J)};
  }
  static ParamEstimate from_plant(const PlantParams& p) {
    return from_mass_inertia(p.m, p.J);
  }
};

// Default guard on |chi7| before beta(chi) is inverted, in N.
inline constexpr double kDefaultThrustGuard = 0.1;

// L_F^4 H, the drift part of the fourth output derivatives.
Vec2 alpha(const ExtendedState& chi, const ParamEstimate& est);

// Decoupling matrix, rows L_G L_F^3 H_i.
Mat2 beta(const ExtendedState& chi, const ParamEstimate& est);

// Closed-form inverse of beta. Throws SingularThrust if |chi7| < u_min.
Mat2 beta_inv(const ExtendedState& chi, const ParamEstimate& est,
              double u_min = kDefaultThrustGuard);

// Linearizing law w = -beta^-1 (alpha - v).
ExtendedInput iol_w(const ExtendedState& chi, const Vec2& v,
                    const ParamEstimate& est,
                    double u_min = kDefaultThrustGuard);

// Coordinates of the Brunovsky system. g is the known gravity constant.
TransformedState xi_of_chi(const ExtendedState& chi, const ParamEstimate& est,
                           double g);

}  // namespace adiol
