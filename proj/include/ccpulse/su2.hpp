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

#include <array>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace ccpulse {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Dense 2x2 complex matrix, row-major (a b; c d).
///
/// Used both for propagators and for first-order error operators, which are
/// not unitary. Global phase is never stripped.
class Matrix2 {
 public:
  constexpr Matrix2() = default;
  constexpr Matrix2(Complex a, Complex b, Complex c, Complex d)
      : m_{a, b, c, d} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
  static constexpr Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr Matrix2 pauli_y() {
    return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
  }
  static constexpr Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

  constexpr Complex operator()(int row, int col) const {
    return m_[static_cast<std::size_t>(2 * row + col)];
  }
  constexpr const std::array<Complex, 4>& entries() const { return m_; }

  Matrix2 adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
            std::conj(m_[3])};
  }
  Complex trace() const { return m_[0] + m_[3]; }
  Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  /// Largest entry magnitude; the norm used for all error-operator checks.
  double max_abs() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2],
            x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
            x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2],
            x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]};
  }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] + y.m_[0], x.m_[1] + y.m_[1], x.m_[2] + y.m_[2],
            x.m_[3] + y.m_[3]};
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] - y.m_[0], x.m_[1] - y.m_[1], x.m_[2] - y.m_[2],
            x.m_[3] - y.m_[3]};
  }
  friend Matrix2 operator*(Complex s, const Matrix2& x) {
    return {s * x.m_[0], s * x.m_[1], s * x.m_[2], s * x.m_[3]};
  }
  friend Matrix2 operator*(const Matrix2& x, Complex s) { return s * x; }

 private:
  std::array<Complex, 4> m_{};
};

/// Max-entry distance between two matrices.
double max_abs_diff(const Matrix2& x, const Matrix2& y);

/// A 2x2 unitary. Instances only come from closed-form rotations, products of
/// unitaries, global phases, or an explicit checked conversion.
class Unitary2 {
 public:
  Unitary2() : m_(Matrix2::identity()) {}

  /// Wraps `m`, throwing InvalidParameter if max|m^dagger m - I| > tol.
  static Unitary2 from_matrix(const Matrix2& m, double tol = 1e-10);
  /// Wraps without checking; for constructions unitary by closed form.
  static Unitary2 unchecked(const Matrix2& m) { return Unitary2(m); }

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Complex trace() const { return m_.trace(); }

  Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }
  Unitary2 with_phase(double alpha) const;

  /// max|U^dagger U - I|.
  double unitarity_deviation() const;

  friend Unitary2 operator*(const Unitary2& x, const Unitary2& y) {
    return Unitary2(x.m_ * y.m_);
  }

 private:
  explicit Unitary2(const Matrix2& m) : m_(m) {}
  Matrix2 m_;
};

/// One elementary pulse: rotation by `theta` about n(phi) = (cos phi, sin phi, 0).
/// Angles are kept raw; `normalized()` is the only place phi is wrapped.
struct RotationParams {
  double theta = 0.0;
  double phi = 0.0;

  RotationParams normalized() const;
  friend bool operator==(const RotationParams&, const RotationParams&) = default;
};

/// Reduces an angle to [0, 2pi).
double wrap_two_pi(double angle);

/// Ordered pulses (index 0 applied first) plus the gate they implement.
struct PulseSequence {
  std::vector<RotationParams> pulses;
  RotationParams target;
  std::string label;

  std::size_t size() const { return pulses.size(); }
};

/// exp[-i theta n(phi).sigma / 2] in closed form.
Unitary2 rotation(const RotationParams& p);

/// Product of `ops` with ops[0] applied first (rightmost). Empty -> identity.
Unitary2 compose(std::span<const Unitary2> ops);

/// Zero-error product of a sequence.
Unitary2 product(const PulseSequence& seq);

/// Target gate of a sequence as a unitary.
inline Unitary2 target_unitary(const PulseSequence& seq) {
  return rotation(seq.target);
}

/// |tr(u^dagger v)| / 2, insensitive to the global phase of either argument.
double fidelity(const Unitary2& u, const Unitary2& v);

/// 1 - fidelity(u, v), evaluated without the cancellation of 1 - |tr|/2:
/// with W = u^dagger v = e^{ia}(w0 I - i w.sigma), 1 - |w0| = |w|^2/(1+|w0|).
double infidelity(const Unitary2& u, const Unitary2& v);

/// True iff u is the identity up to global phase: |tr u|/2 >= 1 - tol.
bool is_trivial(const Unitary2& u, double tol = 1e-6);

}  // namespace ccpulse
