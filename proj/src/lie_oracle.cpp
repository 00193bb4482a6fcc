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

#include "adiol/lie_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "adiol/errors.hpp"
#include "adiol/integrator.hpp"
#include "adiol/linearizer.hpp"

namespace adiol {

namespace {

// Seven-point central stencils on f(-3h) .. f(3h); derivative orders 1-4,
// each at least fourth-order accurate.
constexpr double kStencil[4][7] = {
    {-1.0 / 60, 9.0 / 60, -45.0 / 60, 0.0, 45.0 / 60, -9.0 / 60, 1.0 / 60},
    {2.0 / 180, -27.0 / 180, 270.0 / 180, -490.0 / 180, 270.0 / 180,
     -27.0 / 180, 2.0 / 180},
    {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8},
    {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6},
};

// Output positions at t = -3h .. 3h along the flow of F + G w.
std::array<Vec2, 7> output_samples(const ExtendedState& chi,
                                   const ExtendedInput& w, const PlantParams& p,
                                   const LieOracleOptions& opt) {
  const auto field = [&](double, const ExtendedState& y) {
    return extended_deriv(y, w, p);
  };
  const int substeps = std::max(
      1, static_cast<int>(std::lround(opt.stencil_step / opt.flow_step)));
  const double step = opt.stencil_step / substeps;

  std::array<Vec2, 7> out;
  out[3] = chi.head<2>();
  for (int direction : {1, -1}) {
    ExtendedState y = chi;
    double t = 0.0;
    const double h = direction * step;
    for (int point = 1; point <= 3; ++point) {
      for (int i = 0; i < substeps; ++i) {
        y = rk4_step(y, t, h, field);
        t += h;
      }
      out[3 + direction * point] = y.head<2>();
    }
  }
  return out;
}

}  // namespace

std::array<Mat2, 4> lie_input_derivatives(const ExtendedState& chi,
                                          const PlantParams& p,
                                          const LieOracleOptions& opt) {
  if (!(opt.stencil_step > 0.0) || !(opt.flow_step > 0.0) ||
      !(opt.input_step > 0.0)) {
    throw ValidationError("Lie oracle steps must be positive");
  }
  std::array<Mat2, 4> lie;
  for (int j = 0; j < 2; ++j) {
    ExtendedInput dw = ExtendedInput::Zero();
    dw(j) = opt.input_step;
    std::array<Vec2, 7> plus, minus;
    try {
      plus = output_samples(chi, dw, p, opt);
      minus = output_samples(chi, -dw, p, opt);
    } catch (const NonFiniteState& e) {
      throw IllConditioned(std::string("Lie oracle flow diverged: ") +
                           e.what());
    }
    for (int k = 0; k < 4; ++k) {
      Vec2 acc = Vec2::Zero();
      for (int n = 0; n < 7; ++n) acc += kStencil[k][n] * (plus[n] - minus[n]);
      lie[k].col(j) =
          acc / (std::pow(opt.stencil_step, k + 1) * 2.0 * opt.input_step);
    }
  }
  for (const Mat2& m : lie) {
    if (!m.allFinite()) {
      throw IllConditioned("Lie oracle stencil produced non-finite values");
    }
  }
  return lie;
}

RelativeDegreeReport lie_relative_degree_check(const ExtendedState& chi,
                                               const PlantParams& p,
                                               const LieOracleOptions& opt) {
  if (!(std::abs(chi(6)) > opt.u_min)) throw SingularThrust(chi(6), opt.u_min);

  RelativeDegreeReport r;
  r.lie = lie_input_derivatives(chi, p, opt);
  r.beta_closed_form = beta(chi, ParamEstimate::from_plant(p));
  r.scale = std::max(1.0, r.beta_closed_form.cwiseAbs().maxCoeff());
  for (int k = 0; k < 3; ++k) {
    r.max_lower = std::max(r.max_lower, r.lie[k].cwiseAbs().maxCoeff());
  }
  r.max_lower /= r.scale;
  r.beta_rel_error =
      (r.lie[3] - r.beta_closed_form).cwiseAbs().maxCoeff() / r.scale;
  r.det_numeric = r.lie[3].determinant();
  r.det_closed_form = r.beta_closed_form.determinant();
  r.passed = r.max_lower < opt.lower_tol && r.beta_rel_error < opt.beta_rel_tol;
  return r;
}

}  // namespace adiol
