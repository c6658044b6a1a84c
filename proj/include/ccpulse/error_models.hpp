// Copyright 2026 The ccpulse Authors
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

#include "ccpulse/su2.hpp"

namespace ccpulse {

/// Pulse-length error strength (epsilon) and off-resonance strength (f).
/// The same pair is applied to every pulse of a sequence.
struct ErrorStrengths {
  double epsilon = 0.0;
  double f = 0.0;
};

enum class ErrorAxis { PLE, ORE };

const char* to_string(ErrorAxis axis);

/// dU'/d(epsilon) and dU'/df at zero error.
struct FirstOrderErrors {
  Matrix2 e_eps;
  Matrix2 e_f;
};

inline constexpr double kDerivativeStep = 1e-4;
inline constexpr double kRobustTolerance = 1e-6;

/// exp[-i (1+eps) theta (n(phi).sigma + f sigma_z) / 2], closed form through
/// the effective axis (cos phi, sin phi, f)/sqrt(1+f^2).
Unitary2 pulse_with_errors(const RotationParams& p, const ErrorStrengths& e);

Unitary2 sequence_with_errors(const PulseSequence& seq,
                              const ErrorStrengths& e);

/// Central differences at (0, 0) along each error axis with one Richardson
/// level (steps h and h/2).
FirstOrderErrors first_order_errors(const PulseSequence& seq,
                                    double step = kDerivativeStep);

/// Exact first-order operators by the product rule, using the closed-form
/// single-pulse derivatives -i theta (n.sigma) R / 2 and -i sin(theta/2)
/// sigma_z. Independent of the finite-difference path above.
FirstOrderErrors first_order_errors_analytic(const PulseSequence& seq);

/// Max-entry norm of the requested first-order operator is at most `tol`.
bool is_robust(const PulseSequence& seq, ErrorAxis axis,
               double tol = kRobustTolerance);

}  // namespace ccpulse
