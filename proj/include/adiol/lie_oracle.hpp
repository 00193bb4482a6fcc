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

#include <array>

#include "adiol/model.hpp"
#include "adiol/types.hpp"

namespace adiol {

// Numerical estimate of the Lie derivatives L_G L_F^k H_i, k = 0..3, built
// only from extended_deriv flows. Each input channel j is perturbed by
// +/- input_step around w = 0; the difference of the two output trajectories
// is affine in the input through its fourth time derivative, so its k+1-th
// derivative at t = 0, divided by 2 * input_step, is L_{G_j} L_F^k H.
// Time derivatives use 7-point central stencils over RK4 flows run both
// forward and backward in time.
struct LieOracleOptions {
  double stencil_step = 5e-3;  // s, spacing of the time stencil
  double flow_step = 1e-4;     // s, RK4 step of the underlying flows
  double input_step = 0.5;     // perturbation of each input channel
  double lower_tol = 1e-6;     // scaled bound on k < 3 entries
  double beta_rel_tol = 1e-4;  // bound on the k = 3 relative mismatch
  double u_min = 0.1;
};

struct RelativeDegreeReport {
  // lie[k](i, j) = L_{G_j} L_F^k H_i.
  std::array<Mat2, 4> lie{};
  Mat2 beta_closed_form = Mat2::Zero();
  double scale = 1.0;             // max(1, max |beta|)
  double max_lower = 0.0;         // max |lie[k]| over k < 3, divided by scale
  double beta_rel_error = 0.0;    // max |lie[3] - beta| / scale
  double det_numeric = 0.0;
  double det_closed_form = 0.0;
  bool passed = false;
};

// Throws IllConditioned when the stencil produces non-finite values and
// SingularThrust when |chi7| <= u_min.
RelativeDegreeReport lie_relative_degree_check(
    const ExtendedState& chi, const PlantParams& p,
    const LieOracleOptions& opt = {});

// Same computation without the thrust guard, for probing the singular set.
std::array<Mat2, 4> lie_input_derivatives(const ExtendedState& chi,
                                          const PlantParams& p,
                                          const LieOracleOptions& opt = {});

}  // namespace adiol
