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

#include "adiol/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiol/errors.hpp"

namespace adiol {

Vec2 EllipseSpec::center() const {
  return Vec2(a * std::cos(phi), a * std::sin(phi));
}

void EllipseSpec::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(omega > 0.0)) {
    throw ValidationError("ellipse: a, b and omega must be > 0");
  }
  if (!std::isfinite(phi)) throw ValidationError("ellipse: phi not finite");
}

void HilbertSpec::validate() const {
  if (order != 2) throw ValidationError("hilbert: only order 2 is supported");
  if (!(size > 0.0) || !(seg_time > 0.0)) {
    throw ValidationError("hilbert: size and seg_time must be > 0");
  }
  if (!origin.allFinite()) throw ValidationError("hilbert: origin not finite");
}

DesiredState ellipse_ref(double t, const EllipseSpec& spec) {
  // Position is c + R(phi) (-a cos(wt), b sin(wt)). Each derivative of the
  // harmonic part rotates (cos, sin) by a quarter turn and scales by w.
  const Vec2 c = spec.center();
  const double cp = std::cos(spec.phi);
  const double sp = std::sin(spec.phi);
  const double w = spec.omega;
  const double cw = std::cos(w * t);
  const double sw = std::sin(w * t);

  // Harmonic part h(t) and its derivatives up to the fourth.
  std::array<Vec2, 5> h;
  double scale = 1.0;
  for (int n = 0; n < 5; ++n) {
    // d^n/dt^n cos(wt) = w^n cos(wt + n pi/2), same for sin.
    double dc = 0.0;
    double ds = 0.0;
    switch (n % 4) {
      case 0: dc = cw;  ds = sw;  break;
      case 1: dc = -sw; ds = cw;  break;
      case 2: dc = -cw; ds = -sw; break;
      case 3: dc = sw;  ds = -cw; break;
    }
    const double q1 = -spec.a * dc * scale;
    const double q2 = spec.b * ds * scale;
    h[n] = Vec2(cp * q1 - sp * q2, sp * q1 + cp * q2);
    scale *= w;
  }

  DesiredState d;
  const Vec2 pos = c + h[0];
  d.xi_d << pos(0), h[1](0), h[2](0), h[3](0), pos(1), h[1](1), h[2](1),
      h[3](1);
  d.ff = h[4];
  return d;
}

std::vector<Vec2> hilbert_waypoints(const HilbertSpec& spec) {
  spec.validate();
  // Turtle walk of the L-system A -> +BF-AFA-FB+, B -> -AF+BFB+FA-, with
  // '+' a counterclockwise quarter turn and the turtle initially facing +x.
  // For order 2 the walk visits (0,0), (1,0), (1,1), (0,1), ...
  std::string program = "A";
  for (int level = 0; level < spec.order; ++level) {
    std::string next;
    for (char ch : program) {
      if (ch == 'A') next += "+BF-AFA-FB+";
      else if (ch == 'B') next += "-AF+BFB+FA-";
      else next += ch;
    }
    program = std::move(next);
  }

  const double cell = spec.size / ((1 << spec.order) - 1);
  int x = 0, y = 0;
  int dx = 1, dy = 0;
  std::vector<Vec2> points{spec.origin};
  for (char ch : program) {
    if (ch == '+') {
      std::swap(dx, dy);
      dx = -dx;
    } else if (ch == '-') {
      std::swap(dx, dy);
      dy = -dy;
    } else if (ch == 'F') {
      x += dx;
      y += dy;
      points.push_back(spec.origin + cell * Vec2(x, y));
    }
  }
  return points;
}

HilbertPath::HilbertPath(const HilbertSpec& spec)
    : spec_(spec), points_(hilbert_waypoints(spec)) {}

DesiredState HilbertPath::operator()(double t) const {
  DesiredState d;
  const std::size_t segments = points_.size() - 1;
  const double s = std::max(t, 0.0) / spec_.seg_time;
  Vec2 pos;
  Vec2 vel = Vec2::Zero();
  if (s >= static_cast<double>(segments)) {
    pos = points_.back();
  } else {
    const auto idx = static_cast<std::size_t>(std::floor(s));
    const double frac = s - static_cast<double>(idx);
    const Vec2 delta = points_[idx + 1] - points_[idx];
    pos = points_[idx] + frac * delta;
    vel = delta / spec_.seg_time;
  }
  d.xi_d << pos(0), vel(0), 0.0, 0.0, pos(1), vel(1), 0.0, 0.0;
  d.ff.setZero();
  return d;
}

DesiredState hilbert_ref(double t, const HilbertSpec& spec) {
  return HilbertPath(spec)(t);
}

DesiredState reference(double t, const TrajectorySpec& spec) {
  return std::visit(
      [t](const auto& s) -> DesiredState {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EllipseSpec>) return ellipse_ref(t, s);
        else return hilbert_ref(t, s);
      },
      spec);
}

Vec2 start_position(const TrajectorySpec& spec) {
  const DesiredState d = reference(0.0, spec);
  return Vec2(d.xi_d(0), d.xi_d(4));
}

}  // namespace adiol
