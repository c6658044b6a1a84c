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

#include "ccpulse/error_models.hpp"

#include <cmath>

#include "ccpulse/errors.hpp"

namespace ccpulse {

namespace {

const Complex kMinusI{0.0, -1.0};

Matrix2 axis_dot_sigma(double phi) {
  return {0.0, std::polar(1.0, -phi), std::polar(1.0, phi), 0.0};
}

Matrix2 central_difference(const PulseSequence& seq, ErrorAxis axis,
                           double h) {
  const ErrorStrengths plus =
      axis == ErrorAxis::PLE ? ErrorStrengths{h, 0.0} : ErrorStrengths{0.0, h};
  const ErrorStrengths minus = axis == ErrorAxis::PLE
                                   ? ErrorStrengths{-h, 0.0}
                                   : ErrorStrengths{0.0, -h};
  const Matrix2 diff = sequence_with_errors(seq, plus).matrix() -
                       sequence_with_errors(seq, minus).matrix();
  return Complex{1.0 / (2.0 * h)} * diff;
}

Matrix2 richardson(const PulseSequence& seq, ErrorAxis axis, double h) {
  const Matrix2 coarse = central_difference(seq, axis, h);
  const Matrix2 fine = central_difference(seq, axis, h / 2.0);
  return Complex{1.0 / 3.0} * (Complex{4.0} * fine - coarse);
}

}  // namespace

const char* to_string(ErrorAxis axis) {
  return axis == ErrorAxis::PLE ? "PLE" : "ORE";
}

Unitary2 pulse_with_errors(const RotationParams& p, const ErrorStrengths& e) {
  if (!std::isfinite(p.theta) || !std::isfinite(p.phi) ||
      !std::isfinite(e.epsilon) || !std::isfinite(e.f)) {
    throw InvalidParameter("pulse_with_errors: non-finite input");
  }
  const double norm = std::sqrt(1.0 + e.f * e.f);
  const double nx = std::cos(p.phi) / norm;
  const double ny = std::sin(p.phi) / norm;
  const double nz = e.f / norm;
  const double half = (1.0 + e.epsilon) * p.theta * norm / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  // cos(a/2) I - i sin(a/2) (n.sigma)
  return Unitary2::unchecked(Matrix2{Complex{c, -s * nz},
                                     Complex{-s * ny, -s * nx},
                                     Complex{s * ny, -s * nx},
                                     Complex{c, s * nz}});
}

Unitary2 sequence_with_errors(const PulseSequence& seq,
                              const ErrorStrengths& e) {
  Unitary2 out;
  for (const RotationParams& p : seq.pulses) out = pulse_with_errors(p, e) * out;
  return out;
}

FirstOrderErrors first_order_errors(const PulseSequence& seq, double step) {
  return {richardson(seq, ErrorAxis::PLE, step),
          richardson(seq, ErrorAxis::ORE, step)};
}

FirstOrderErrors first_order_errors_analytic(const PulseSequence& seq) {
  // Running value and derivatives of the partial product R_i ... R_1.
  Matrix2 value = Matrix2::identity();
  Matrix2 d_eps = Matrix2::zero();
  Matrix2 d_f = Matrix2::zero();
  for (const RotationParams& p : seq.pulses) {
    const Matrix2 r = rotation(p).matrix();
    const Matrix2 r_eps =
        Complex{0.0, -p.theta / 2.0} * (axis_dot_sigma(p.phi) * r);
    const Matrix2 r_f = kMinusI * std::sin(p.theta / 2.0) * Matrix2::pauli_z();
    d_eps = r * d_eps + r_eps * value;
    d_f = r * d_f + r_f * value;
    value = r * value;
  }
  return {d_eps, d_f};
}

bool is_robust(const PulseSequence& seq, ErrorAxis axis, double tol) {
  const FirstOrderErrors errs = first_order_errors(seq);
  const Matrix2& op = axis == ErrorAxis::PLE ? errs.e_eps : errs.e_f;
  return op.max_abs() <= tol;
}

}  // namespace ccpulse
