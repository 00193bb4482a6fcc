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
#include <complex>
#include <span>

#include "adiol/types.hpp"

namespace adiol {

using Pole = std::complex<double>;

// Gains of one 4-integrator chain; the same row acts on both output chains.
// k is signed so that A + B K is Hurwitz (all entries negative for stable
// real poles).
struct GainSet {
  Vec4 k = Vec4::Zero();
  std::array<Pole, 4> poles{};

  Vec4 magnitudes() const { return k.cwiseAbs(); }
  // 2 x 8 block-diagonal gain matrix.
  Mat2x8 matrix() const;
};

struct DesiredState {
  TransformedState xi_d = TransformedState::Zero();
  Vec2 ff = Vec2::Zero();  // (y_d1^(4), y_d2^(4)); zero on nonsmooth paths
};

struct BrunovskyMatrices {
  Mat8 A;
  Mat8x2 B;
};

BrunovskyMatrices brunovsky_matrices();

// Companion-form pole placement on one chain. Complex poles must come in
// conjugate pairs. Throws UnstablePoleRequest for Re(pole) >= 0 and
// ValidationError for an unpaired complex pole.
GainSet place_gains(std::span<const Pole> poles);
GainSet place_gains(const std::array<double, 4>& poles);

// Coefficients (a0, a1, a2, a3) of s^4 + a3 s^3 + a2 s^2 + a1 s + a0.
Vec4 characteristic_coefficients(std::span<const Pole> poles);

// v = K (xi - xi_d) + ff.
Vec2 tracking_v(const TransformedState& xi, const DesiredState& des,
                const GainSet& gains);

// Eigenvalues of A + B K, unsorted.
Eigen::Matrix<std::complex<double>, 8, 1> closed_loop_eigenvalues(
    const GainSet& gains);

}  // namespace adiol
