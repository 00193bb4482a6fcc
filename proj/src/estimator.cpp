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

#include "adiol/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiol/errors.hpp"

namespace adiol {

void EstimatorConfig::validate() const {
  const auto fail = [](const std::string& what) {
    throw ValidationError("estimator: " + what);
  };
  if (!(c1 > 0.0)) fail("c1 must be > 0");
  if (!(c2 > 0.0)) fail("c2 must be > 0");
  if (!(alpha1 > 0.0 && alpha1 < 1.0)) fail("alpha1 must lie in (0, 1)");
  if (!(alpha2 > 1.0) || !std::isfinite(alpha2)) fail("alpha2 must be > 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail("lambda must be > 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) fail("gamma must be > 0");
  if (!(eps >= 0.0)) fail("eps must be >= 0");
  if (!(theta_floor > 0.0)) fail("theta_floor must be > 0");
}

Regressor regressor(const PlantState& x, const PlantInput& u, double g) {
  Regressor r;
  r.psi << x(3), x(4), x(5), 0.0, -g, 0.0;
  r.phi.setZero();
  r.phi(3, 0) = -std::sin(x(2)) * u(0);
  r.phi(4, 0) = std::cos(x(2)) * u(0);
  r.phi(5, 1) = u(1);
  return r;
}

FilterDeriv filter_deriv(const EstimatorState& st, const PlantState& x,
                         const PlantInput& u, double gamma, double g) {
  const Regressor r = regressor(x, u, g);
  return {-gamma * st.z1 + x, -gamma * st.z2 + r.psi,
          -gamma * st.zphi + r.phi};
}

Vec6 filtered_x(const EstimatorState& st, const PlantState& x, double gamma) {
  return x - gamma * st.z1 - st.z2;
}

DataMatrixDeriv data_matrix_deriv(const EstimatorState& st, const Vec6& x_f,
                                  const Mat6x2& phi_f, double lambda) {
  return {-lambda * st.xbar + phi_f.transpose() * x_f,
          -lambda * st.phibar + phi_f.transpose() * phi_f};
}

Vec2 estimator_residual(const Vec2& theta_hat, const Vec2& xbar,
                        const Mat2& phibar) {
  return phibar * theta_hat - xbar;
}

Vec2 estimate_deriv(const Vec2& theta_hat, const Vec2& xbar, const Mat2& phibar,
                    const EstimatorConfig& cfg) {
  const Vec2 xi = estimator_residual(theta_hat, xbar, phibar);
  const double n = xi.norm();
  if (n <= cfg.eps || n == 0.0) return Vec2::Zero();
  // Xi / n^(1 - a) = Xi * n^(a - 1)
  return -(cfg.c1 * std::pow(n, cfg.alpha1 - 1.0) +
           cfg.c2 * std::pow(n, cfg.alpha2 - 1.0)) *
         xi;
}

MassInertia params_from_theta(const Vec2& theta_hat, double floor) {
  return {1.0 / std::max(theta_hat(0), floor),
          1.0 / std::max(theta_hat(1), floor)};
}

}  // namespace adiol
