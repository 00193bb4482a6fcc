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

struct EstimatorConfig {
  double c1 = 6.0;
  double c2 = 3.0;
  double alpha1 = 0.2;
  double alpha2 = 1.2;
  double lambda = 80.0;  // forgetting factor, 1/s
  double gamma = 10.0;   // regressor filter pole, 1/s
  double eps = 1e-12;    // dead zone on ||Xi||
  double theta_floor = 1e-3;

  void validate() const;
};

// Filter states and data matrices of the finite-time estimator. All fields
// start at zero except theta_hat.
struct EstimatorState {
  Vec6 z1 = Vec6::Zero();        // x / (s + gamma)
  Vec6 z2 = Vec6::Zero();        // Psi(x) / (s + gamma)
  Mat6x2 zphi = Mat6x2::Zero();  // Phi(x, u) / (s + gamma)
  Vec2 xbar = Vec2::Zero();
  Mat2 phibar = Mat2::Zero();
  Vec2 theta_hat = Vec2(2.0, 10.0);
};

struct Regressor {
  Vec6 psi;
  Mat6x2 phi;
};

// x_dot - Psi(x) = Phi(x, u) Theta with Theta = (1/m, 1/J).
Regressor regressor(const PlantState& x, const PlantInput& u, double g);

struct FilterDeriv {
  Vec6 z1;
  Vec6 z2;
  Mat6x2 zphi;
};

FilterDeriv filter_deriv(const EstimatorState& st, const PlantState& x,
                         const PlantInput& u, double gamma, double g);

// x_f = s x / (s + gamma) - Psi / (s + gamma), realized as x - gamma z1 - z2.
Vec6 filtered_x(const EstimatorState& st, const PlantState& x, double gamma);
inline const Mat6x2& filtered_phi(const EstimatorState& st) { return st.zphi; }

struct DataMatrixDeriv {
  Vec2 xbar;
  Mat2 phibar;
};

DataMatrixDeriv data_matrix_deriv(const EstimatorState& st, const Vec6& x_f,
                                  const Mat6x2& phi_f, double lambda);

// Xi = phibar theta_hat - xbar.
Vec2 estimator_residual(const Vec2& theta_hat, const Vec2& xbar,
                        const Mat2& phibar);

// Two-power gradient flow on Xi; zero inside the eps dead zone.
Vec2 estimate_deriv(const Vec2& theta_hat, const Vec2& xbar, const Mat2& phibar,
                    const EstimatorConfig& cfg);

struct MassInertia {
  double m;
  double J;
};

MassInertia params_from_theta(const Vec2& theta_hat, double floor);

}  // namespace adiol
