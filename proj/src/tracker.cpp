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

#include "adiol/tracker.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "adiol/errors.hpp"

namespace adiol {

BrunovskyMatrices brunovsky_matrices() {
  BrunovskyMatrices m{Mat8::Zero(), Mat8x2::Zero()};
  for (int chain = 0; chain < 2; ++chain) {
    const int base = 4 * chain;
    for (int i = 0; i < 3; ++i) m.A(base + i, base + i + 1) = 1.0;
    m.B(base + 3, chain) = 1.0;
  }
  return m;
}

namespace {

void check_conjugate_pairs(std::span<const Pole> poles) {
  std::vector<bool> used(poles.size(), false);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (used[i] || poles[i].imag() == 0.0) continue;
    bool paired = false;
    for (std::size_t j = i + 1; j < poles.size(); ++j) {
      if (!used[j] && poles[j] == std::conj(poles[i])) {
        used[i] = used[j] = paired = true;
        break;
      }
    }
    if (!paired) {
      throw ValidationError("complex pole without its conjugate");
    }
  }
}

}  // namespace

Vec4 characteristic_coefficients(std::span<const Pole> poles) {
  // Expand prod (s - p_i) over complex arithmetic; imaginary parts cancel
  // for conjugate pairs. coeff[n] multiplies s^n.
  std::array<Pole, 5> coeff{Pole(1.0), Pole(0.0), Pole(0.0), Pole(0.0),
                            Pole(0.0)};
  int degree = 0;
  for (const Pole& p : poles) {
    for (int n = degree + 1; n > 0; --n) coeff[n] = coeff[n - 1] - p * coeff[n];
    coeff[0] = -p * coeff[0];
    ++degree;
  }
  return Vec4(coeff[0].real(), coeff[1].real(), coeff[2].real(),
              coeff[3].real());
}

GainSet place_gains(std::span<const Pole> poles) {
  if (poles.size() != 4) {
    throw ValidationError("exactly 4 poles are required per output chain");
  }
  for (const Pole& p : poles) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw ValidationError("pole is not finite");
    }
    if (!(p.real() < 0.0)) {
      throw UnstablePoleRequest("pole with nonnegative real part requested");
    }
  }
  check_conjugate_pairs(poles);
  GainSet gains;
  gains.k = -characteristic_coefficients(poles);
  std::copy(poles.begin(), poles.end(), gains.poles.begin());
  return gains;
}

GainSet place_gains(const std::array<double, 4>& poles) {
  std::array<Pole, 4> complex_poles;
  std::transform(poles.begin(), poles.end(), complex_poles.begin(),
                 [](double p) { return Pole(p); });
  return place_gains(std::span<const Pole>(complex_poles));
}

Mat2x8 GainSet::matrix() const {
  Mat2x8 K = Mat2x8::Zero();
  K.block<1, 4>(0, 0) = k.transpose();
  K.block<1, 4>(1, 4) = k.transpose();
  return K;
}

Vec2 tracking_v(const TransformedState& xi, const DesiredState& des,
                const GainSet& gains) {
  const TransformedState e = xi - des.xi_d;
  return Vec2(gains.k.dot(e.head<4>()), gains.k.dot(e.tail<4>())) + des.ff;
}

Eigen::Matrix<std::complex<double>, 8, 1> closed_loop_eigenvalues(
    const GainSet& gains) {
  const BrunovskyMatrices m = brunovsky_matrices();
  const Mat8 closed = m.A + m.B * gains.matrix();
  Eigen::EigenSolver<Mat8> solver(closed, false);
  return solver.eigenvalues();
}

}  // namespace adiol
