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

#include <cstdint>

#include "adiol/lie_oracle.hpp"
#include "adiol/sim.hpp"

namespace adiol {

// Random extended states used by the numeric checks: positions in [-5, 5],
// theta in [-pi, pi], velocities in [-2, 2], |chi7| in [thrust_lo, thrust_hi]
// with random sign, chi8 in [-5, 5].
std::vector<ExtendedState> random_extended_states(std::size_t count,
                                                  std::uint64_t seed,
                                                  double thrust_lo = 1.0,
                                                  double thrust_hi = 20.0);

struct RelativeDegreeSummary {
  std::size_t states = 0;
  std::size_t failures = 0;
  double max_lower = 0.0;
  double max_beta_rel_error = 0.0;
  bool passed() const { return states > 0 && failures == 0; }
};

RelativeDegreeSummary check_relative_degree(
    const std::vector<ExtendedState>& states, const PlantParams& p,
    const LieOracleOptions& opt = {});

struct BetaInverseSummary {
  std::size_t states = 0;
  double max_identity_error = 0.0;   // max ||beta beta^-1 - I||_inf
  double max_det_rel_error = 0.0;    // det beta vs chi7 / (m^2 J)
  bool passed(double identity_tol = 1e-10, double det_tol = 1e-12) const {
    return max_identity_error < identity_tol && max_det_rel_error < det_tol;
  }
};

BetaInverseSummary check_beta_inverse(const std::vector<ExtendedState>& states,
                                      const ParamEstimate& est);

struct LinearizationSummary {
  std::size_t samples = 0;
  double max_abs_error = 0.0;  // max |y^(4) - v|
  double v_scale = 0.0;        // max |v| over the window
  double rel_error() const {
    return v_scale > 0.0 ? max_abs_error / v_scale : max_abs_error;
  }
};

// Fourth derivatives of the logged outputs by a 7-point central stencil,
// compared with the logged virtual input v for records with t >= t_from.
// Requires uniformly spaced records.
LinearizationSummary check_linearization(const TimeSeries& ts, double t_from);

// cfg with the estimator frozen at the true parameters.
SimConfig exact_parameter_config(SimConfig cfg);

}  // namespace adiol
