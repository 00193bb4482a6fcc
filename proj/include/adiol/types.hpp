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

#include <Eigen/Dense>

namespace adiol {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat2 = Eigen::Matrix2d;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat6x2 = Eigen::Matrix<double, 6, 2>;
using Mat8x2 = Eigen::Matrix<double, 8, 2>;
using Mat2x8 = Eigen::Matrix<double, 2, 8>;

// (r1, r2, theta, r1_dot, r2_dot, theta_dot), SI units, theta unwrapped.
using PlantState = Vec6;
// (u1 total thrust, u2 = ell * (f2 - f1) torque).
using PlantInput = Vec2;
// Plant state followed by u1 and u1_dot.
using ExtendedState = Vec8;
// (u1_ddot, u2).
using ExtendedInput = Vec2;
// Output derivative chains (y1, y1', y1'', y1''', y2, ..., y2''').
using TransformedState = Vec8;

}  // namespace adiol
