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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "adiol/errors.hpp"
#include "adiol/integrator.hpp"
#include "adiol/sim.hpp"
#include "adiol/verify.hpp"

namespace adiol {
namespace {

using Scalar1 = Eigen::Matrix<double, 1, 1>;

double rk4_decay(double dt, double t_end) {
  Scalar1 y(1.0);
  const int n = static_cast<int>(std::lround(t_end / dt));
  auto f = [](double, const Scalar1& v) { return Scalar1(-v); };
  for (int i = 0; i < n; ++i) y = rk4_step(y, i * dt, dt, f);
  return y(0);
}

TEST(Rk4, SingleStep) {
  // 1 - h + h^2/2 - h^3/6 + h^4/24 at h = 0.1.
  EXPECT_NEAR(rk4_decay(0.1, 0.1), 0.9048375, 1e-15);
}

TEST(Rk4, FourthOrderConvergence) {
  const double exact = std::exp(-1.0);
  double prev = std::abs(rk4_decay(0.1, 1.0) - exact);
  for (double dt : {0.05, 0.025, 0.0125}) {
    const double err = std::abs(rk4_decay(dt, 1.0) - exact);
    EXPECT_GE(std::log2(prev / err), 3.9) << "dt = " << dt;
    prev = err;
  }
}

TEST(Rk4, RejectsNonFinite) {
  auto f = [](double, const Scalar1& v) { return Scalar1(v * 1e308); };
  EXPECT_THROW(rk4_step(Scalar1(1e10), 0.0, 1.0, f), NonFiniteState);
}

TEST(CompositeState, FlattenRoundTrip) {
  CompositeState s;
  CompositeState::Flat y;
  for (int i = 0; i < CompositeState::kSize; ++i) y(i) = 0.5 * i - 3.0;
  s = CompositeState::unflatten(y);
  EXPECT_EQ(s.flatten(), y);
  EXPECT_EQ(s.est.theta_hat, Vec2(y(38), y(39)));
}

SimConfig short_config(double t_end, bool adaptive) {
  SimConfig cfg;
  cfg.t_end = t_end;
  cfg.adaptive = adaptive;
  return cfg;
}

TEST(Simulate, InitialConditions) {
  const SimConfig cfg = short_config(0.1, true);
  const ClosedLoop loop(cfg);
  const CompositeState s0 = loop.initial_state();
  EXPECT_EQ(s0.chi.head<6>(), PlantState::Zero());
  // Hover thrust under the initial mass estimate 1 / 2.
  EXPECT_DOUBLE_EQ(s0.chi(6), 0.5 * 9.81);
  EXPECT_EQ(s0.chi(7), 0.0);
  EXPECT_EQ(s0.est.theta_hat, Vec2(2.0, 10.0));
}

TEST(Simulate, LogCadence) {
  SimConfig cfg = short_config(0.5, true);
  cfg.log_every = 7;
  const TimeSeries ts = simulate(cfg);
  // Steps 0, 7, ..., 497 plus the final step 500.
  ASSERT_EQ(ts.size(), 73u);
  EXPECT_EQ(ts.front().t, 0.0);
  EXPECT_NEAR(ts[1].t, 0.007, 1e-15);
  EXPECT_NEAR(ts.back().t, 0.5, 1e-12);
}

TEST(Simulate, Deterministic) {
  const SimConfig cfg = short_config(2.0, true);
  const TimeSeries a = simulate(cfg);
  const TimeSeries b = simulate(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].theta_hat, b[i].theta_hat);
  }
}

TEST(Simulate, BatchMatchesSequential) {
  std::vector<SimConfig> configs;
  for (int i = 0; i < 5; ++i) {
    SimConfig cfg = short_config(1.0, i % 2 == 0);
    cfg.est.c1 = 3.0 + i;
    configs.push_back(cfg);
  }
  const auto batch = simulate_batch(configs, 3);
  ASSERT_EQ(batch.size(), configs.size());
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const TimeSeries seq = simulate(configs[k]);
    ASSERT_EQ(seq.size(), batch[k].size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      EXPECT_EQ(seq[i].x, batch[k][i].x);
      EXPECT_EQ(seq[i].theta_hat, batch[k][i].theta_hat);
    }
  }
}

TEST(Simulate, FrozenEstimateStaysPut) {
  SimConfig cfg = short_config(1.0, false);
  const TimeSeries ts = simulate(cfg);
  for (const auto& r : ts) EXPECT_EQ(r.theta_hat, Vec2(2.0, 10.0));
}

TEST(Simulate, AbortsOnThrustGuard) {
  SimConfig cfg = short_config(1.0, true);
  cfg.u_min = 100.0;  // above the initial hover thrust
  try {
    simulate(cfg);
    FAIL() << "expected SimulationAborted";
  } catch (const SimulationAborted& e) {
    EXPECT_EQ(e.step(), 0u);
    EXPECT_EQ(e.time(), 0.0);
  }
}

TEST(Simulate, TransformedStateFollowsBrunovskyDynamics) {
  // With exact parameters, d/dt xi = A xi + B v; checked by central
  // differences of the logged xi at the logging step.
  SimConfig cfg = exact_parameter_config(short_config(4.0, false));
  cfg.log_every = 1;
  const TimeSeries ts = simulate(cfg);
  const auto [A, B] = brunovsky_matrices();
  const double h = cfg.dt;
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    const Vec8 fd = (ts[i + 1].xi - ts[i - 1].xi) / (2.0 * h);
    const Vec8 model = A * ts[i].xi + B * ts[i].v;
    worst = std::max(worst, (fd - model).cwiseAbs().maxCoeff());
    scale = std::max(scale, model.cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-4 * scale);
}

TEST(Summarize, Examples) {
  TimeSeries ts;
  for (int i = 0; i <= 10; ++i) {
    TimeSeriesRecord r;
    r.t = i;
    r.pos_err = i < 4 ? Vec2(1.0, 0.0) : Vec2(0.024, 0.032);
    r.theta_err_norm = i < 6 ? 1.0 : 0.0;
    r.u = Vec2(10.0 - i, i % 2 ? -0.5 : 0.25);
    ts.push_back(r);
  }
  MetricsOptions opt;
  opt.rmse_start = 4.0;
  const Metrics m = summarize(ts, opt);
  EXPECT_NEAR(m.pos_rmse, 0.04, 1e-15);
  ASSERT_TRUE(m.settle_time.has_value());
  EXPECT_EQ(*m.settle_time, 4.0);
  ASSERT_TRUE(m.theta_converge_time.has_value());
  EXPECT_EQ(*m.theta_converge_time, 6.0);
  EXPECT_EQ(m.max_thrust, 10.0);
  EXPECT_EQ(m.max_torque, 0.5);

  // A failing final sample means the threshold is never settled.
  ts.back().pos_err = Vec2(1.0, 0.0);
  EXPECT_FALSE(summarize(ts, opt).settle_time.has_value());
  EXPECT_THROW(summarize(TimeSeries{}), EmptySeries);
}

TEST(Summarize, WindowPastEndUsesWholeRun) {
  TimeSeries ts(2);
  ts[0].t = 0.0;
  ts[0].pos_err = Vec2(3.0, 4.0);
  ts[1].t = 1.0;
  MetricsOptions opt;
  opt.rmse_start = 5.0;
  EXPECT_NEAR(summarize(ts, opt).pos_rmse, std::sqrt(12.5), 1e-15);
}

TEST(Adaptation, ErrorNonIncreasingAfterTransient) {
  const TimeSeries ts = simulate(short_config(10.0, true));
  double prev = INFINITY;
  for (const auto& r : ts) {
    if (r.t < 0.3) continue;
    EXPECT_LE(r.theta_err_norm, prev) << "t = " << r.t;
    prev = r.theta_err_norm;
  }
  EXPECT_LT(ts.back().theta_err_norm, ts.front().theta_err_norm);
}

TEST(Adaptation, LargerGainConvergesFurther) {
  double prev = INFINITY;
  for (double c1 : {6.0, 12.0, 24.0}) {
    SimConfig cfg = short_config(10.0, true);
    cfg.est.c1 = c1;
    const double err = simulate(cfg).back().theta_err_norm;
    EXPECT_LT(err, prev) << "c1 = " << c1;
    prev = err;
  }
}

TEST(Adaptation, MassEstimateConverges) {
  // theta_hat1 stays close but not exactly on 1: the off-diagonal of phibar
  // couples it to the slowly converging theta_hat2 error.
  const TimeSeries ts = simulate(short_config(5.0, true));
  for (const auto& r : ts) {
    if (r.t >= 1.0) EXPECT_NEAR(r.theta_hat(0), 1.0, 1e-3) << "t = " << r.t;
  }
}

}  // namespace
}  // namespace adiol
