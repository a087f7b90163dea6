// Copyright 2026 The gaitdyn Authors
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

#include <cmath>
#include <cstddef>

#include "gaitdyn/error.hpp"

namespace gaitdyn::quadrature {

struct Result {
  double value = 0.0;
  double last_difference = 0.0;  ///< |T(n) - T(n/2)| at termination
  std::size_t intervals = 0;
  bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr std::size_t kMaxIntervals = std::size_t{1} << 20;

/// Composite trapezoid rule, halving the step until two successive
/// estimates differ by less than `tol` (at least one halving is always
/// performed) or `max_intervals` is reached. Requires a <= b.
template <class F>
Result adaptive_trapezoid(F&& f, double a, double b,
                          double tol = kDefaultTolerance,
                          std::size_t max_intervals = kMaxIntervals) {
  if (!(a <= b)) {
    throw DomainError("quadrature", "integration bounds inverted (lower > upper)");
  }
  Result r;
  if (a == b) {
    r.converged = true;
    r.intervals = 1;
    return r;
  }
  std::size_t n = 1;
  double h = b - a;
  double estimate = 0.5 * h * (f(a) + f(b));
  while (n < max_intervals) {
    double midpoints = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      midpoints += f(a + (static_cast<double>(i) + 0.5) * h);
    }
    const double refined = 0.5 * estimate + 0.5 * h * midpoints;
    n *= 2;
    h *= 0.5;
    r.last_difference = std::abs(refined - estimate);
    estimate = refined;
    if (r.last_difference < tol) {
      r.converged = true;
      break;
    }
  }
  r.value = estimate;
  r.intervals = n;
  return r;
}

}  // namespace gaitdyn::quadrature
