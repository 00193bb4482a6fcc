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

#include "adiol/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "adiol/errors.hpp"
#include "adiol/integrator.hpp"

namespace adiol {

void SimConfig::validate() const {
  plant.validate();
  est.validate();
  std::visit([](const auto& s) { s.validate(); }, traj);
  place_gains(std::span<const Pole>(poles));
  if (!(dt > 0.0)) throw ValidationError("sim.dt must be > 0");
  if (!(t_end >= dt)) throw ValidationError("sim.t_end must be >= sim.dt");
  if (log_every < 1) throw ValidationError("sim.log_every must be >= 1");
  if (!(u_min > 0.0)) throw ValidationError("control.u_min must be > 0");
  if (!theta0.allFinite()) throw ValidationError("estimator.theta0 not finite");
  if (x0 && !x0->allFinite()) throw ValidationError("sim.x0 not finite");
}

// Layout: chi(8) z1(6) z2(6) zphi(12, column-major) xbar(2) phibar(4)
// theta_hat(2).
CompositeState::Flat CompositeState::flatten() const {
  Flat y;
  y.segment<8>(0) = chi;
  y.segment<6>(8) = est.z1;
  y.segment<6>(14) = est.z2;
  y.segment<12>(20) = est.zphi.reshaped();
  y.segment<2>(32) = est.xbar;
  y.segment<4>(34) = est.phibar.reshaped();
  y.segment<2>(38) = est.theta_hat;
  return y;
}

CompositeState CompositeState::unflatten(const Flat& y) {
  CompositeState s;
  s.chi = y.segment<8>(0);
  s.est.z1 = y.segment<6>(8);
  s.est.z2 = y.segment<6>(14);
  s.est.zphi = y.segment<12>(20).reshaped(6, 2);
  s.est.xbar = y.segment<2>(32);
  s.est.phibar = y.segment<4>(34).reshaped(2, 2);
  s.est.theta_hat = y.segment<2>(38);
  return s;
}

ClosedLoop::ClosedLoop(SimConfig cfg)
    : cfg_(std::move(cfg)),
      gains_(place_gains(std::span<const Pole>(cfg_.poles))) {
  if (const auto* h = std::get_if<HilbertSpec>(&cfg_.traj)) hilbert_.emplace(*h);
}

CompositeState ClosedLoop::initial_state() const {
  CompositeState s;
  PlantState x0 = PlantState::Zero();
  if (cfg_.x0) {
    x0 = *cfg_.x0;
  } else {
    x0.head<2>() = start_position(cfg_.traj);
  }
  s.est.theta_hat = cfg_.theta0;
  const MassInertia mi = params_from_theta(cfg_.theta0, cfg_.est.theta_floor);
  s.chi.head<6>() = x0;
  s.chi(6) = mi.m * cfg_.plant.g;  // hover thrust for the initial estimate
  s.chi(7) = 0.0;
  return s;
}

DesiredState ClosedLoop::desired(double t) const {
  if (hilbert_) return (*hilbert_)(t);
  return ellipse_ref(t, std::get<EllipseSpec>(cfg_.traj));
}

StepOutputs ClosedLoop::evaluate(double t, const CompositeState& s) const {
  StepOutputs o;
  const MassInertia mi =
      params_from_theta(s.est.theta_hat, cfg_.est.theta_floor);
  o.m_hat = mi.m;
  o.J_hat = mi.J;
  const ParamEstimate est = ParamEstimate::from_mass_inertia(mi.m, mi.J);
  o.xi = xi_of_chi(s.chi, est, cfg_.plant.g);
  o.desired = desired(t);
  o.v = tracking_v(o.xi, o.desired, gains_);
  o.w = iol_w(s.chi, o.v, est, cfg_.u_min);
  o.u = PlantInput(s.chi(6), o.w(1));
  o.x_f = filtered_x(s.est, s.chi.head<6>(), cfg_.est.gamma);
  o.phi_f = filtered_phi(s.est);
  o.residual =
      estimator_residual(s.est.theta_hat, s.est.xbar, s.est.phibar);
  return o;
}

CompositeState ClosedLoop::derivative(double t,
                                      const CompositeState& s) const {
  const StepOutputs o = evaluate(t, s);
  const PlantState x = s.chi.head<6>();

  CompositeState d;
  d.chi = extended_deriv(s.chi, o.w, cfg_.plant);
  const FilterDeriv fd =
      filter_deriv(s.est, x, o.u, cfg_.est.gamma, cfg_.plant.g);
  d.est.z1 = fd.z1;
  d.est.z2 = fd.z2;
  d.est.zphi = fd.zphi;
  const DataMatrixDeriv dm =
      data_matrix_deriv(s.est, o.x_f, o.phi_f, cfg_.est.lambda);
  d.est.xbar = dm.xbar;
  d.est.phibar = dm.phibar;
  d.est.theta_hat =
      cfg_.adaptive ? estimate_deriv(s.est.theta_hat, s.est.xbar,
                                     s.est.phibar, cfg_.est)
                    : Vec2::Zero();
  return d;
}

CompositeState::Flat ClosedLoop::derivative(
    double t, const CompositeState::Flat& y) const {
  return derivative(t, CompositeState::unflatten(y)).flatten();
}

CompositeState total_deriv(const CompositeState& s, double t,
                           const SimConfig& cfg) {
  return ClosedLoop(cfg).derivative(t, s);
}

namespace {

TimeSeriesRecord make_record(double t, const CompositeState& s,
                             const StepOutputs& o, const Vec2& theta_true) {
  TimeSeriesRecord r;
  r.t = t;
  r.x = s.chi.head<6>();
  r.u = o.u;
  r.w = o.w;
  r.xi = o.xi;
  r.xi_d = o.desired.xi_d;
  r.v = o.v;
  r.theta_hat = s.est.theta_hat;
  r.theta_err_norm = (theta_true - s.est.theta_hat).norm();
  r.pos_err = Vec2(r.x(0) - r.xi_d(0), r.x(1) - r.xi_d(4));
  return r;
}

}  // namespace

TimeSeries simulate(const SimConfig& cfg, const StepObserver& observer) {
  cfg.validate();
  const ClosedLoop loop(cfg);
  const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
  const auto every = static_cast<std::size_t>(cfg.log_every);
  const Vec2 theta_true = cfg.theta_true();
  const auto field = [&loop](double t, const CompositeState::Flat& y) {
    return loop.derivative(t, y);
  };

  TimeSeries ts;
  ts.reserve(steps / every + 2);
  CompositeState::Flat y = loop.initial_state().flatten();
  for (std::size_t i = 0;; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    try {
      if (i % every == 0 || i == steps) {
        const CompositeState s = CompositeState::unflatten(y);
        const StepOutputs o = loop.evaluate(t, s);
        ts.push_back(make_record(t, s, o, theta_true));
        if (observer) observer(StepView{i, t, s, o});
      }
      if (i == steps) break;
      y = rk4_step(y, t, cfg.dt, field);
    } catch (const SingularThrust& e) {
      throw SimulationAborted(i, t, e.what());
    } catch (const NonFiniteState& e) {
      throw SimulationAborted(i, t, e.what());
    }
  }
  return ts;
}

std::vector<TimeSeries> simulate_batch(std::span<const SimConfig> configs,
                                       unsigned max_threads) {
  if (max_threads == 0) {
    max_threads = std::max(1u, std::thread::hardware_concurrency());
  }
  std::vector<TimeSeries> results(configs.size());
  std::size_t next = 0;
  while (next < configs.size()) {
    const std::size_t end =
        std::min(configs.size(), next + static_cast<std::size_t>(max_threads));
    std::vector<std::future<TimeSeries>> running;
    for (std::size_t i = next; i < end; ++i) {
      running.push_back(std::async(std::launch::async,
                                   [&cfg = configs[i]] { return simulate(cfg); }));
    }
    for (std::size_t i = next; i < end; ++i) {
      results[i] = running[i - next].get();
    }
    next = end;
  }
  return results;
}

namespace {

// Time of the first record from which `ok` holds through the end.
template <typename Pred>
std::optional<double> first_time_holding(const TimeSeries& ts, Pred ok) {
  std::optional<double> since;
  for (const TimeSeriesRecord& r : ts) {
    if (ok(r)) {
      if (!since) since = r.t;
    } else {
      since.reset();
    }
  }
  return since;
}

}  // namespace

Metrics summarize(const TimeSeries& ts, const MetricsOptions& opt) {
  if (ts.empty()) throw EmptySeries();
  Metrics m;
  double sum = 0.0;
  std::size_t count = 0;
  for (const TimeSeriesRecord& r : ts) {
    if (r.t >= opt.rmse_start) {
      sum += r.pos_err.squaredNorm();
      ++count;
    }
    m.max_thrust = std::max(m.max_thrust, std::abs(r.u(0)));
    m.max_torque = std::max(m.max_torque, std::abs(r.u(1)));
  }
  if (count == 0) {
    // Window starts after the series ends; fall back to the whole run.
    for (const TimeSeriesRecord& r : ts) sum += r.pos_err.squaredNorm();
    count = ts.size();
  }
  m.pos_rmse = std::sqrt(sum / static_cast<double>(count));
  m.settle_time = first_time_holding(ts, [&](const TimeSeriesRecord& r) {
    return r.pos_err.norm() < opt.settle_tol;
  });
  m.theta_converge_time =
      first_time_holding(ts, [&](const TimeSeriesRecord& r) {
        return r.theta_err_norm < opt.theta_tol;
      });
  return m;
}

Metrics summarize(const TimeSeries& ts, const SimConfig& cfg) {
  MetricsOptions opt;
  opt.rmse_start = cfg.rmse_start;
  return summarize(ts, opt);
}

}  // namespace adiol
