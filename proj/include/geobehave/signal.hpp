// Copyright 2026 The Geobehave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <span>

#include "geobehave/ingest.hpp"

namespace geobehave::signal {

/// Direct-form-I biquad with normalized coefficients (a0 == 1).
template <typename Scalar>
struct Biquad {
  Scalar b0 = 1, b1 = 0, b2 = 0, a1 = 0, a2 = 0;

  /// Second-order Butterworth sections via the bilinear transform with
  /// prewarping (Q = 1/sqrt(2)).
  static Biquad lowpass(Scalar cutoff_hz, Scalar rate_hz) {
    const Scalar w = Scalar(2) * std::numbers::pi_v<Scalar> * cutoff_hz / rate_hz;
    const Scalar alpha = std::sin(w) / std::numbers::sqrt2_v<Scalar>;
    const Scalar c = std::cos(w);
    const Scalar a0 = Scalar(1) + alpha;
    return {(Scalar(1) - c) / Scalar(2) / a0, (Scalar(1) - c) / a0, (Scalar(1) - c) / Scalar(2) / a0,
            Scalar(-2) * c / a0, (Scalar(1) - alpha) / a0};
  }
  static Biquad highpass(Scalar cutoff_hz, Scalar rate_hz) {
    const Scalar w = Scalar(2) * std::numbers::pi_v<Scalar> * cutoff_hz / rate_hz;
    const Scalar alpha = std::sin(w) / std::numbers::sqrt2_v<Scalar>;
    const Scalar c = std::cos(w);
    const Scalar a0 = Scalar(1) + alpha;
    return {(Scalar(1) + c) / Scalar(2) / a0, -(Scalar(1) + c) / a0, (Scalar(1) + c) / Scalar(2) / a0,
            Scalar(-2) * c / a0, (Scalar(1) - alpha) / a0};
  }
};

/// High-pass then low-pass Butterworth cascade. The upper edge is clamped
/// below Nyquist for low sampling rates.
template <typename Scalar>
class BandPass {
 public:
  BandPass(Scalar low_hz, Scalar high_hz, Scalar rate_hz)
      : hp_(Biquad<Scalar>::highpass(low_hz, rate_hz)),
        lp_(Biquad<Scalar>::lowpass(std::min(high_hz, Scalar(0.45) * rate_hz), rate_hz)) {}

  /// Filters `x` from rest (zero initial state).
  template <typename Derived>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> apply(const Eigen::MatrixBase<Derived>& x) const {
    return run(lp_, run(hp_, x));
  }

 private:
  template <typename Derived>
  static Eigen::Matrix<Scalar, Eigen::Dynamic, 1> run(const Biquad<Scalar>& f,
                                                      const Eigen::MatrixBase<Derived>& x) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y(x.size());
    Scalar x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const Scalar xi = x(i);
      const Scalar yi = f.b0 * xi + f.b1 * x1 + f.b2 * x2 - f.a1 * y1 - f.a2 * y2;
      x2 = x1;
      x1 = xi;
      y2 = y1;
      y1 = yi;
      y(i) = yi;
    }
    return y;
  }

  Biquad<Scalar> hp_;
  Biquad<Scalar> lp_;
};

/// Vector magnitude minus 1 g for each sample.
Eigen::VectorXd dynamic_magnitude(std::span<const AccelSample> samples);

/// Index ranges [begin, end) of runs without a recording gap.
struct Run {
  std::size_t begin = 0;
  std::size_t end = 0;
};
std::vector<Run> contiguous_runs(std::span<const AccelSample> samples);

}  // namespace geobehave::signal
