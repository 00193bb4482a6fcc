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

#include "adiol/errors.hpp"

namespace adiol {

// One classical fourth-order Runge-Kutta step of y' = f(t, y). Throws
// NonFiniteState if the update contains NaN or Inf.
template <typename Vec, typename Deriv>
Vec rk4_step(const Vec& y, double t, double dt, Deriv&& f) {
  const double half = 0.5 * dt;
  const Vec k1 = f(t, y);
  const Vec k2 = f(t + half, Vec(y + half * k1));
  const Vec k3 = f(t + half, Vec(y + half * k2));
  const Vec k4 = f(t + dt, Vec(y + dt * k3));
  Vec next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!next.allFinite()) {
    throw NonFiniteState("non-finite state after RK4 step at t = " +
                         std::to_string(t));
  }
  return next;
}

}  // namespace adiol
