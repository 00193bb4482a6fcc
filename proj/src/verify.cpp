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

#include "adiol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "adiol/linearizer.hpp"

namespace adiol {

std::vector<ExtendedState> random_extended_states(std::size_t count,
                                                  std::uint64_t seed,
                                                  double thrust_lo,
                                                  double thrust_hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  std::uniform_real_distribution<double> thrust(thrust_lo, thrust_hi);
  std::uniform_real_distribution<double> jerk(-5.0, 5.0);
  std::bernoulli_distribution negative(0.5);
  std::vector<ExtendedState> out(count);
  for (ExtendedState& chi : out) {
    chi << pos(rng), pos(rng), angle(rng), vel(rng), vel(rng), vel(rng),
        thrust(rng), jerk(rng);
    if (negative(rng)) chi(6) = -chi(6);
  }
  return out;
}

RelativeDegreeSummary check_relative_degree(
    const std::vector<ExtendedState>& states, const PlantParams& p,
    const LieOracleOptions& opt) {
  RelativeDegreeSummary s;
  for (const ExtendedState& chi : states) {
    const RelativeDegreeReport r = lie_relative_degree_check(chi, p, opt);
    ++s.states;
    if (!r.passed) ++s.failures;
    s.max_lower = std::max(s.max_lower, r.max_lower);
    s.max_beta_rel_error = std::max(s.max_beta_rel_error, r.beta_rel_error);
  }
  return s;
}

BetaInverseSummary check_beta_inverse(const std::vector<ExtendedState>& states,
                                      const ParamEstimate& est) {
  BetaInverseSummary s;
  const double m = est.mass();
  const double J = est.inertia();
  for (const ExtendedState& chi : states) {
    const Mat2 prod = beta(chi, est) * beta_inv(chi, est);
    const double err =
        (prod - Mat2::Identity()).cwiseAbs().rowwise().sum().maxCoeff();
    const double det_expected = chi(6) / (m * m * J);
    const double det_err =
        std::abs(beta(chi, est).determinant() - det_expected) /
        std::abs(det_expected);
    ++s.states;
    s.max_identity_error = std::max(s.max_identity_error, err);
    s.max_det_rel_error = std::max(s.max_det_rel_error, det_err);
  }
  return s;
}

LinearizationSummary check_linearization(const TimeSeries& ts, double t_from) {
  // Fourth derivative, 7-point central stencil, O(h^4).
  constexpr double kD4[7] = {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3,
                             -13.0 / 2, 2.0, -1.0 / 6};
  LinearizationSummary s;
  if (ts.size() < 7) return s;
  const double h = ts[1].t - ts[0].t;
  const double h4 = h * h * h * h;
  for (std::size_t i = 3; i + 3 < ts.size(); ++i) {
    if (ts[i].t < t_from) continue;
    // Skip a shortened final interval.
    if (std::abs((ts[i + 3].t - ts[i - 3].t) - 6.0 * h) > 1e-9 * h) continue;
    Vec2 d4 = Vec2::Zero();
    for (int n = 0; n < 7; ++n) {
      const TimeSeriesRecord& r = ts[i + n - 3];
      d4 += kD4[n] * Vec2(r.x(0), r.x(1));
    }
    d4 /= h4;
    ++s.samples;
    s.max_abs_error =
        std::max(s.max_abs_error, (d4 - ts[i].v).cwiseAbs().maxCoeff());
    s.v_scale = std::max(s.v_scale, ts[i].v.cwiseAbs().maxCoeff());
  }
  return s;
}

SimConfig exact_parameter_config(SimConfig cfg) {
  cfg.adaptive = false;
  cfg.theta0 = cfg.theta_true();
  return cfg;
}

}  // namespace adiol
