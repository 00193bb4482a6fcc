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

#include "adiol/linearizer.hpp"

#include <cmath>

#include "adiol/errors.hpp"

namespace adiol {

Vec2 alpha(const ExtendedState& chi, const ParamEstimate& est) {
  const double s = std::sin(chi(2));
  const double c = std::cos(chi(2));
  const double inv_m = est.theta(0);
  const double w = chi(5);
  return Vec2(-w * (2.0 * chi(7) * c - w * chi(6) * s) * inv_m,
              -w * (2.0 * chi(7) * s + w * chi(6) * c) * inv_m);
}

Mat2 beta(const ExtendedState& chi, const ParamEstimate& est) {
  const double s = std::sin(chi(2));
  const double c = std::cos(chi(2));
  const double inv_m = est.theta(0);
  const double inv_J = est.theta(1);
  Mat2 b;
  b << -s * inv_m, -c * chi(6) * inv_m * inv_J,  //
      c * inv_m, -s * chi(6) * inv_m * inv_J;
  return b;
}

Mat2 beta_inv(const ExtendedState& chi, const ParamEstimate& est,
              double u_min) {
  const double thrust = chi(6);
  if (!(std::abs(thrust) >= u_min)) throw SingularThrust(thrust, u_min);
  const double s = std::sin(chi(2));
  const double c = std::cos(chi(2));
  const double m = est.mass();
  const double Jm = est.inertia() * m;
  Mat2 bi;
  bi << -m * s, m * c,  //
      -Jm * c / thrust, -Jm * s / thrust;
  return bi;
}

ExtendedInput iol_w(const ExtendedState& chi, const Vec2& v,
                    const ParamEstimate& est, double u_min) {
  return -beta_inv(chi, est, u_min) * (alpha(chi, est) - v);
}

TransformedState xi_of_chi(const ExtendedState& chi, const ParamEstimate& est,
                           double g) {
  const double s = std::sin(chi(2));
  const double c = std::cos(chi(2));
  const double inv_m = est.theta(0);
  const double thrust = chi(6);
  TransformedState xi;
  xi << chi(0), chi(3), -s * thrust * inv_m,
      (-c * thrust * chi(5) - s * chi(7)) * inv_m,  //
      chi(1), chi(4), -g + c * thrust * inv_m,
      (-s * thrust * chi(5) + c * chi(7)) * inv_m;
  return xi;
}

}  // namespace adiol
