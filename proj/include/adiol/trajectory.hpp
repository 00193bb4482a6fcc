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

#include <variant>
#include <vector>

#include "adiol/tracker.hpp"
#include "adiol/types.hpp"

namespace adiol {

// Tilted ellipse starting at the origin:
//   r1 = a cos(phi) - a cos(phi) cos(wt) - b sin(phi) sin(wt)
//   r2 = a sin(phi) - a sin(phi) cos(wt) + b cos(phi) sin(wt)
struct EllipseSpec {
  double a = 5.0;
  double b = 3.0;
  double phi = 0.7853981633974483;  // rad
  double omega = 1.0;               // rad/s

  Vec2 center() const;
  void validate() const;
};

// Order-2 Hilbert curve on a 4x4 grid of side `size`, traversed at constant
// speed with seg_time seconds per grid segment.
struct HilbertSpec {
  int order = 2;
  double size = 3.0;
  double seg_time = 2.0;
  Vec2 origin = Vec2::Zero();

  double duration() const { return 15.0 * seg_time; }
  void validate() const;
};

using TrajectorySpec = std::variant<EllipseSpec, HilbertSpec>;

DesiredState ellipse_ref(double t, const EllipseSpec& spec);

std::vector<Vec2> hilbert_waypoints(const HilbertSpec& spec);

DesiredState hilbert_ref(double t, const HilbertSpec& spec);

// Precomputes the waypoints once; equivalent to hilbert_ref.
class HilbertPath {
 public:
  explicit HilbertPath(const HilbertSpec& spec);
  DesiredState operator()(double t) const;
  const std::vector<Vec2>& waypoints() const { return points_; }

 private:
  HilbertSpec spec_;
  std::vector<Vec2> points_;
};

DesiredState reference(double t, const TrajectorySpec& spec);
Vec2 start_position(const TrajectorySpec& spec);

}  // namespace adiol
