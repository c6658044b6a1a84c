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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ccpulse/error_models.hpp"
#include "ccpulse/su2.hpp"

namespace ccpulse {

enum class RepKind { REP_PLE, REP_ORE, NONE };

const char* to_string(RepKind kind);

/// Residual-error-preserving class of a sequence together with its
/// first-order robustness. REP_PLE implies robust_ore; REP_ORE implies
/// robust_ple.
struct RepClass {
  RepKind rep = RepKind::NONE;
  bool robust_ple = false;
  bool robust_ore = false;
  double e_eps_norm = 0.0;
  double e_f_norm = 0.0;
};

/// Compares the surviving first-order term with the elementary pulse's term
/// for the target gate, after rotating U0's global phase onto the target.
RepClass classify_rep(const PulseSequence& seq,
                      double tol = kRobustTolerance);

/// Sum of raw pulse angles in units of pi. Throws InvalidSequence on a
/// negative angle.
double time_cost(const PulseSequence& seq);

struct AxisRange {
  double min = -0.2;
  double max = 0.2;
};

/// Row-major fidelity grid: values[i * f_axis.size() + j] is F at
/// (eps_axis[i], f_axis[j]).
struct FidelityMap {
  std::vector<double> eps_axis;
  std::vector<double> f_axis;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const {
    return values[i * f_axis.size() + j];
  }
};

/// Evenly spaced samples from `range.min` to `range.max` inclusive.
std::vector<double> linspace(const AxisRange& range, std::size_t count);

/// F(eps, f) between the target rotation and the perturbed sequence. Cells
/// are independent and are split across `threads` workers (0 = hardware
/// concurrency); output does not depend on the thread count.
FidelityMap fidelity_map(const PulseSequence& seq,
                         const AxisRange& eps_range = {},
                         const AxisRange& f_range = {},
                         std::size_t eps_resolution = 101,
                         std::size_t f_resolution = 101,
                         unsigned threads = 1);

enum class FitAxis { PLE, ORE, DIAGONAL };

const char* to_string(FitAxis axis);

struct RobustnessFit {
  FitAxis axis = FitAxis::PLE;
  double slope = 0.0;
  double r_squared = 0.0;
  std::size_t samples_used = 0;
};

/// Least-squares slope of log10(1 - F) against log10(strength) over 20
/// log-spaced strengths in [1e-3, 1e-1]. DIAGONAL sets eps = f. Samples with
/// 1 - F <= 1e-13 are dropped; throws DomainError if fewer than 3 remain.
RobustnessFit robustness_order(const PulseSequence& seq, FitAxis axis);

struct NoGoViolation {
  RotationParams first;
  RotationParams second;
  ErrorAxis axis = ErrorAxis::PLE;
  double trace_fidelity = 0.0;
};

struct NoGoReport {
  std::size_t resolution = 0;
  std::uint64_t pairs_scanned = 0;
  std::uint64_t ple_robust_pairs = 0;
  std::uint64_t ore_robust_pairs = 0;
  std::uint64_t violations = 0;
  /// First few violations in grid order, for diagnostics.
  std::vector<NoGoViolation> examples;
};

/// Exhaustive scan of two-pulse sequences on a resolution^4 grid,
/// theta in (0, 2pi] and phi in [0, 2pi). Every pair robust on an axis
/// (max-norm <= robust_tol) must be trivial within trivial_tol; failures are
/// counted, not thrown. Throws InvalidParameter if resolution < 8.
NoGoReport n2_no_go_scan(std::size_t resolution,
                         double robust_tol = kRobustTolerance,
                         double trivial_tol = 1e-6, unsigned threads = 0);

}  // namespace ccpulse
