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

#include "ccpulse/pulse_library.hpp"

#include <cmath>
#include <string>

#include "ccpulse/errors.hpp"

namespace ccpulse {

namespace {

void require_finite(const RotationParams& p, const char* who) {
  if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) {
    throw InvalidParameter(std::string(who) + ": non-finite target angle");
  }
}

double checked_arccos(double x, const char* formula) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError(std::string(formula) + ": arccos argument " +
                      std::to_string(x) + " outside [-1, 1]");
  }
  return std::acos(x);
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

double correction_phase(double theta) {
  return checked_arccos(-theta / (4.0 * kPi), "arccos[-theta/(4pi)]");
}

double arcsinc(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("arcsinc: argument " + std::to_string(y) +
                      " has no solution in [0, pi]");
  }
  if (y == 1.0) return 0.0;
  if (y == 0.0) return kPi;
  double lo = 0.0;
  double hi = kPi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (sinc(mid) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double corpse_k(double theta) { return std::asin(std::sin(theta / 2.0) / 2.0); }

PulseSequence elementary(const RotationParams& target) {
  require_finite(target, "elementary");
  return {{target}, target, "elementary"};
}

PulseSequence bb1(const RotationParams& target) {
  require_finite(target, "bb1");
  const auto [theta, phi] = target;
  const double phi1 = phi + correction_phase(theta);
  return {{{kPi, phi1}, {kTwoPi, 3.0 * phi1 - 2.0 * phi}, {kPi, phi1},
           {theta, phi}},
          target,
          "BB1"};
}

PulseSequence scrofulous(const RotationParams& target) {
  require_finite(target, "scrofulous");
  double theta = target.theta;
  double phi = target.phi;
  if (theta <= 0.0 || theta >= kTwoPi) {
    throw DomainError(
        "scrofulous: target angle must lie in (0, 2pi); sin(theta/2) "
        "vanishes or arcsinc[2cos(theta/2)/pi] has no solution");
  }
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi += kPi;
  }
  const double theta1 = arcsinc(2.0 * std::cos(theta / 2.0) / kPi);
  const double phi1 = checked_arccos(
      -kPi * std::cos(theta1) / (2.0 * theta1 * std::sin(theta / 2.0)),
      "scrofulous arccos[-pi cos(theta1)/(2 theta1 sin(theta/2))]");
  const double phi2 =
      phi1 - checked_arccos(-kPi / (2.0 * theta1),
                            "scrofulous arccos[-pi/(2 theta1)]");
  return {{{theta1, phi + phi1}, {kPi, phi + phi2}, {theta1, phi + phi1}},
          target,
          "SCROFULOUS"};
}

PulseSequence sk1(const RotationParams& target) {
  require_finite(target, "sk1");
  const auto [theta, phi] = target;
  const double s = correction_phase(theta);
  return {{{theta, phi}, {kTwoPi, phi - s}, {kTwoPi, phi + s}}, target, "SK1"};
}

PulseSequence corpse(const RotationParams& target, CorpseWindings windings) {
  require_finite(target, "corpse");
  const auto [theta, phi] = target;
  const double k = corpse_k(theta);
  const double t1 = 2.0 * windings.n1 * kPi + theta / 2.0 - k;
  const double t2 = 2.0 * windings.n2 * kPi - 2.0 * k;
  const double t3 = 2.0 * windings.n3 * kPi + theta / 2.0 - k;
  if (t1 < 0.0 || t2 < 0.0 || t3 < 0.0) {
    throw DomainError("corpse: windings (" + std::to_string(windings.n1) +
                      ", " + std::to_string(windings.n2) + ", " +
                      std::to_string(windings.n3) +
                      ") give a negative pulse angle");
  }
  const bool is_short = windings.n1 == 0 && windings.n2 == 1 && windings.n3 == 0;
  return {{{t1, phi}, {t2, phi + kPi}, {t3, phi}},
          target,
          is_short ? "short CORPSE" : "CORPSE"};
}

PulseSequence short_corpse(const RotationParams& target) {
  return corpse(target, CorpseWindings::short_form());
}

PulseSequence trivial_pair(double theta, double phi) {
  // Application order: R(theta, phi + pi) first.
  return {{{theta, phi + kPi}, {theta, phi}}, {0.0, phi}, "trivial pair"};
}

PulseSequence full_rotation(double phi) {
  return {{{kTwoPi, phi}}, {0.0, phi}, "full rotation"};
}

PulseSequence trivial_triple(double phi_prime, double phi) {
  return {{{kPi, phi_prime}, {kTwoPi, phi}, {kPi, phi_prime}},
          {0.0, phi},
          "trivial triple"};
}

}  // namespace ccpulse
