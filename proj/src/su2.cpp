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

#include "ccpulse/su2.hpp"

#include <algorithm>
#include <cmath>

#include "ccpulse/errors.hpp"

namespace ccpulse {

double Matrix2::max_abs() const {
  double out = 0.0;
  for (const Complex& z : m_) out = std::max(out, std::abs(z));
  return out;
}

double max_abs_diff(const Matrix2& x, const Matrix2& y) {
  return (x - y).max_abs();
}

Unitary2 Unitary2::from_matrix(const Matrix2& m, double tol) {
  Unitary2 u(m);
  if (!(u.unitarity_deviation() <= tol)) {
    throw InvalidParameter("matrix is not unitary within tolerance");
  }
  return u;
}

Unitary2 Unitary2::with_phase(double alpha) const {
  return Unitary2(std::polar(1.0, alpha) * m_);
}

double Unitary2::unitarity_deviation() const {
  return max_abs_diff(m_.adjoint() * m_, Matrix2::identity());
}

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

RotationParams RotationParams::normalized() const {
  return {theta, wrap_two_pi(phi)};
}

Unitary2 rotation(const RotationParams& p) {
  if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) {
    throw InvalidParameter("rotation: non-finite angle");
  }
  const double c = std::cos(p.theta / 2.0);
  const double s = std::sin(p.theta / 2.0);
  const Complex off_upper = Complex{0.0, -s} * std::polar(1.0, -p.phi);
  const Complex off_lower = Complex{0.0, -s} * std::polar(1.0, p.phi);
  return Unitary2::unchecked(Matrix2{c, off_upper, off_lower, c});
}

Unitary2 compose(std::span<const Unitary2> ops) {
  Unitary2 out;
  for (const Unitary2& u : ops) out = u * out;
  return out;
}

Unitary2 product(const PulseSequence& seq) {
  Unitary2 out;
  for (const RotationParams& p : seq.pulses) out = rotation(p) * out;
  return out;
}

double fidelity(const Unitary2& u, const Unitary2& v) {
  const Complex tr = (u.matrix().adjoint() * v.matrix()).trace();
  return std::min(1.0, std::abs(tr) / 2.0);
}

double infidelity(const Unitary2& u, const Unitary2& v) {
  const Matrix2 w = u.matrix().adjoint() * v.matrix();
  // |tr(w sigma_k)| / 2 for k = x, y, z.
  const double wx = std::abs(w(0, 1) + w(1, 0)) / 2.0;
  const double wy = std::abs(w(0, 1) - w(1, 0)) / 2.0;
  const double wz = std::abs(w(0, 0) - w(1, 1)) / 2.0;
  const double w0 = std::min(1.0, std::abs(w.trace()) / 2.0);
  return (wx * wx + wy * wy + wz * wz) / (1.0 + w0);
}

bool is_trivial(const Unitary2& u, double tol) {
  return std::abs(u.trace()) / 2.0 >= 1.0 - tol;
}

}  // namespace ccpulse
