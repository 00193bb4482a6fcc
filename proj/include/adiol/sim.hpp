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
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "adiol/estimator.hpp"
#include "adiol/linearizer.hpp"
#include "adiol/model.hpp"
#include "adiol/tracker.hpp"
#include "adiol/trajectory.hpp"
#include "adiol/types.hpp"

namespace adiol {

struct SimConfig {
  PlantParams plant;
  std::array<Pole, 4> poles{Pole(-4.5), Pole(-4.0), Pole(-5.0), Pole(-5.5)};
  EstimatorConfig est;
  TrajectorySpec traj = EllipseSpec{};
  double dt = 1e-3;
  double t_end = 20.0;
  bool adaptive = true;
  Vec2 theta0 = Vec2(2.0, 10.0);
  // Defaults to the trajectory start at rest with theta = 0.
  std::optional<PlantState> x0;
  int log_every = 10;
  double u_min = kDefaultThrustGuard;
  // Start of the window used for pos_rmse.
  double rmse_start = 3.0;

  void validate() const;
  Vec2 theta_true() const { return Vec2(1.0 / plant.m, 1.0 / plant.J); }
};

// Full closed-loop state: extended plant (8) plus estimator (32).
struct CompositeState {
  static constexpr int kSize = 40;
  using Flat = Eigen::Matrix<double, kSize, 1>;

  ExtendedState chi = ExtendedState::Zero();
  EstimatorState est;

  Flat flatten() const;
  static CompositeState unflatten(const Flat& y);
};

// Every signal the controller computes at one (t, state) point.
struct StepOutputs {
  double m_hat = 0.0;
  double J_hat = 0.0;
  TransformedState xi = TransformedState::Zero();
  DesiredState desired;
  Vec2 v = Vec2::Zero();
  ExtendedInput w = ExtendedInput::Zero();
  PlantInput u = PlantInput::Zero();
  Vec6 x_f = Vec6::Zero();
  Mat6x2 phi_f = Mat6x2::Zero();
  Vec2 residual = Vec2::Zero();  // Xi
};

// Plant, linearizing controller and estimator composed into one vector
// field. Holds the synthesized gains and precomputed trajectory data.
class ClosedLoop {
 public:
  explicit ClosedLoop(SimConfig cfg);

  const SimConfig& config() const { return cfg_; }
  const GainSet& gains() const { return gains_; }

  CompositeState initial_state() const;
  DesiredState desired(double t) const;
  StepOutputs evaluate(double t, const CompositeState& s) const;
  CompositeState derivative(double t, const CompositeState& s) const;
  CompositeState::Flat derivative(double t,
                                  const CompositeState::Flat& y) const;

 private:
  SimConfig cfg_;
  GainSet gains_;
  std::optional<HilbertPath> hilbert_;
};

CompositeState total_deriv(const CompositeState& s, double t,
                           const SimConfig& cfg);

struct TimeSeriesRecord {
  double t = 0.0;
  PlantState x = PlantState::Zero();
  PlantInput u = PlantInput::Zero();
  ExtendedInput w = ExtendedInput::Zero();
  TransformedState xi = TransformedState::Zero();
  TransformedState xi_d = TransformedState::Zero();
  Vec2 v = Vec2::Zero();
  Vec2 theta_hat = Vec2::Zero();
  double theta_err_norm = 0.0;
  Vec2 pos_err = Vec2::Zero();
};

using TimeSeries = std::vector<TimeSeriesRecord>;

struct StepView {
  std::size_t step;
  double t;
  const CompositeState& state;
  const StepOutputs& outputs;
};

using StepObserver = std::function<void(const StepView&)>;

// Fixed-step RK4 from 0 to t_end. Records every log_every steps and the
// final step. Throws SimulationAborted with the failing step index.
TimeSeries simulate(const SimConfig& cfg, const StepObserver& observer = {});

// Runs independent configurations on worker threads. Results keep the
// input order and match sequential simulate() exactly.
std::vector<TimeSeries> simulate_batch(std::span<const SimConfig> configs,
                                       unsigned max_threads = 0);

struct MetricsOptions {
  double rmse_start = 3.0;
  double settle_tol = 0.05;
  double theta_tol = 1e-6;
};

struct Metrics {
  double pos_rmse = 0.0;
  std::optional<double> settle_time;
  std::optional<double> theta_converge_time;
  double max_thrust = 0.0;
  double max_torque = 0.0;
};

// Throws EmptySeries.
Metrics summarize(const TimeSeries& ts, const MetricsOptions& opt = {});
Metrics summarize(const TimeSeries& ts, const SimConfig& cfg);

}  // namespace adiol
