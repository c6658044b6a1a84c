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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccpulse/pulse_library.hpp"
#include "oracles.hpp"

using namespace ccpulse;

namespace {

const Complex I{0.0, 1.0};

Matrix2 n_sigma(double phi) {
  return Complex{std::cos(phi)} * Matrix2::pauli_x() +
         Complex{std::sin(phi)} * Matrix2::pauli_y();
}

PulseSequence random_sequence(std::mt19937_64& rng, int max_len = 8) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> len(1, max_len);
  PulseSequence seq;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) seq.pulses.push_back({angle(rng), angle(rng)});
  return seq;
}

}  // namespace

TEST(PulseWithErrors, ErrorFreeLimit) {
  EXPECT_LE(max_abs_diff(pulse_with_errors({kPi, 0.0}, {}).matrix(),
                         rotation({kPi, 0.0}).matrix()),
            1e-15);
}

TEST(PulseWithErrors, PulseLengthErrorScalesAngle) {
  EXPECT_LE(max_abs_diff(pulse_with_errors({kPi, 0.0}, {0.1, 0.0}).matrix(),
                         rotation({1.1 * kPi, 0.0}).matrix()),
            1e-15);
}

TEST(PulseWithErrors, OffResonanceAxisAngle) {
  // Axis (1, 0, 0.5)/sqrt(1.25), angle pi sqrt(1.25); values from a
  // 30-digit matrix exponential.
  const Matrix2 u = pulse_with_errors({kPi, 0.0}, {0.0, 0.5}).matrix();
  EXPECT_NEAR(u(0, 0).real(), -0.184346923200215601626553534934, 1e-14);
  EXPECT_NEAR(u(0, 0).imag(), -0.439548907837708956527614424284, 1e-14);
  EXPECT_NEAR(u(0, 1).real(), 0.0, 1e-15);
  EXPECT_NEAR(u(0, 1).imag(), -0.879097815675417913055228848567, 1e-14);
  EXPECT_NEAR(u(1, 1).imag(), 0.439548907837708956527614424284, 1e-14);
}

TEST(PulseWithErrors, MatchesTaylorExponential) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-3 * kPi, 3 * kPi);
  std::uniform_real_distribution<double> err(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const RotationParams p{angle(rng), angle(rng)};
    const ErrorStrengths e{err(rng), err(rng)};
    EXPECT_LE(oracle::max_diff(oracle::pulse(p.theta, p.phi, e.epsilon, e.f),
                               pulse_with_errors(p, e).matrix()),
              1e-12);
  }
}

TEST(SequenceWithErrors, ZeroErrorIsProduct) {
  const PulseSequence seq = bb1({kPi / 2, 0.3});
  EXPECT_LE(max_abs_diff(sequence_with_errors(seq, {}).matrix(),
                         product(seq).matrix()),
            1e-15);
}

TEST(SequenceWithErrors, SinglePulse) {
  const PulseSequence seq = elementary({1.2, 0.5});
  const ErrorStrengths e{0.05, -0.2};
  EXPECT_LE(max_abs_diff(sequence_with_errors(seq, e).matrix(),
                         pulse_with_errors({1.2, 0.5}, e).matrix()),
            0.0);
}

TEST(SequenceWithErrors, CorpseBeatsElementaryUnderOre) {
  const RotationParams t{kPi, 0.0};
  const ErrorStrengths e{0.0, 0.1};
  const oracle::Mat target = oracle::pulse(kPi, 0.0);
  const double f_corpse =
      oracle::fidelity(target, oracle::sequence(corpse(t).pulses, 0.0, 0.1));
  const double f_elem =
      oracle::fidelity(target, oracle::sequence({t}, 0.0, 0.1));
  ASSERT_GT(f_corpse, f_elem);
  EXPECT_NEAR(fidelity(rotation(t), sequence_with_errors(corpse(t), e)),
              f_corpse, 1e-12);
}

TEST(SequenceWithErrors, UnitaryUnderLargeErrors) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> err(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const PulseSequence seq = random_sequence(rng, 30);
    EXPECT_LE(sequence_with_errors(seq, {err(rng), err(rng)})
                  .unitarity_deviation(),
              1e-12);
  }
}

TEST(FirstOrderErrors, ElementaryClosedForms) {
  for (double theta : {0.3, kPi / 2, kPi, 5.0, 7.5}) {
    for (double phi : {0.0, 0.9, -2.0}) {
      const FirstOrderErrors errs = first_order_errors(elementary({theta, phi}));
      const Matrix2 r = rotation({theta, phi}).matrix();
      const Matrix2 e_eps = Complex{0.0, -theta / 2} * (n_sigma(phi) * r);
      const Matrix2 e_f = Complex{0.0, -std::sin(theta / 2)} * Matrix2::pauli_z();
      EXPECT_LE(max_abs_diff(errs.e_eps, e_eps), 1e-8);
      EXPECT_LE(max_abs_diff(errs.e_f, e_f), 1e-8);
    }
  }
}

TEST(FirstOrderErrors, CorpseCancelsOreOnly) {
  const PulseSequence seq = corpse({kPi / 2, 0.4});
  const FirstOrderErrors errs = first_order_errors(seq);
  EXPECT_LE(errs.e_f.max_abs(), 1e-8);
  const Matrix2 expected =
      Complex{0.0, -kPi / 4} * (n_sigma(0.4) * product(seq).matrix());
  EXPECT_LE(max_abs_diff(errs.e_eps, expected), 1e-8);
}

TEST(FirstOrderErrors, Bb1CancelsPleOnly) {
  const FirstOrderErrors errs = first_order_errors(bb1({kPi / 2, 0.4}));
  EXPECT_LE(errs.e_eps.max_abs(), 1e-8);
  const Matrix2 expected =
      Complex{0.0, -std::sin(kPi / 4)} * Matrix2::pauli_z();
  EXPECT_LE(max_abs_diff(errs.e_f, expected), 1e-8);
}

TEST(FirstOrderErrors, NumericMatchesProductRule) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const PulseSequence seq = random_sequence(rng, 12);
    const FirstOrderErrors num = first_order_errors(seq);
    const FirstOrderErrors exact = first_order_errors_analytic(seq);
    EXPECT_LE(max_abs_diff(num.e_eps, exact.e_eps), 1e-8);
    EXPECT_LE(max_abs_diff(num.e_f, exact.e_f), 1e-8);
  }
}

// Property: halving the step changes the estimate by at most 1e-7 relative.
TEST(FirstOrderErrors, StableUnderStepHalving) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const PulseSequence seq = random_sequence(rng);
    const FirstOrderErrors a = first_order_errors(seq, kDerivativeStep);
    const FirstOrderErrors b = first_order_errors(seq, kDerivativeStep / 2);
    const double scale_eps = std::max(1.0, a.e_eps.max_abs());
    const double scale_f = std::max(1.0, a.e_f.max_abs());
    EXPECT_LE(max_abs_diff(a.e_eps, b.e_eps) / scale_eps, 1e-7);
    EXPECT_LE(max_abs_diff(a.e_f, b.e_f) / scale_f, 1e-7);
  }
}

// Property: i U0^dagger E is Hermitian.
TEST(FirstOrderErrors, AntiHermitianStructure) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const PulseSequence seq = random_sequence(rng);
    const FirstOrderErrors errs = first_order_errors(seq);
    const Matrix2 u0_dag = product(seq).matrix().adjoint();
    for (const Matrix2& e : {errs.e_eps, errs.e_f}) {
      const Matrix2 h = I * (u0_dag * e);
      EXPECT_LE(max_abs_diff(h, h.adjoint()), 1e-8);
    }
  }
}

TEST(SequenceWithErrors, SameAxisCompositionIsExact) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> err(-0.5, 0.5);
  for (int i = 0; i < 50; ++i) {
    const double a = angle(rng), b = angle(rng), phi = angle(rng);
    const ErrorStrengths e{err(rng), err(rng)};
    const PulseSequence two{{{a, phi}, {b, phi}}, {a + b, phi}, ""};
    EXPECT_LE(max_abs_diff(sequence_with_errors(two, e).matrix(),
                           pulse_with_errors({a + b, phi}, e).matrix()),
              1e-14);
  }
}

TEST(IsRobust, LibraryExamples) {
  EXPECT_TRUE(is_robust(scrofulous({kPi / 2, 0.0}), ErrorAxis::PLE));
  EXPECT_FALSE(is_robust(scrofulous({kPi / 2, 0.0}), ErrorAxis::ORE));
  EXPECT_TRUE(is_robust(short_corpse({kPi, 0.0}), ErrorAxis::ORE));
  EXPECT_FALSE(is_robust(short_corpse({kPi, 0.0}), ErrorAxis::PLE));
}
