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

#include "ccpulse/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "ccpulse/errors.hpp"

namespace ccpulse {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// handled by exactly one worker; callers write results into per-index slots.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

Matrix2 axis_dot_sigma(double phi) {
  return {0.0, std::polar(1.0, -phi), std::polar(1.0, phi), 0.0};
}

ErrorStrengths strengths_for(FitAxis axis, double s) {
  switch (axis) {
    case FitAxis::PLE: return {s, 0.0};
    case FitAxis::ORE: return {0.0, s};
    case FitAxis::DIAGONAL: return {s, s};
  }
  return {};
}

}  // namespace

const char* to_string(RepKind kind) {
  switch (kind) {
    case RepKind::REP_PLE: return "PLE";
    case RepKind::REP_ORE: return "ORE";
    case RepKind::NONE: return "none";
  }
  return "?";
}

const char* to_string(FitAxis axis) {
  switch (axis) {
    case FitAxis::PLE: return "PLE";
    case FitAxis::ORE: return "ORE";
    case FitAxis::DIAGONAL: return "DIAGONAL";
  }
  return "?";
}

RepClass classify_rep(const PulseSequence& seq, double tol) {
  const FirstOrderErrors errs = first_order_errors(seq);
  const Unitary2 u0 = product(seq);
  const Unitary2 target = target_unitary(seq);

  // Unit phase p with tr((p U0)^dagger R) real and positive.
  const Complex overlap = (u0.matrix().adjoint() * target.matrix()).trace();
  const Complex phase =
      std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex{1.0};

  RepClass out;
  out.e_eps_norm = errs.e_eps.max_abs();
  out.e_f_norm = errs.e_f.max_abs();
  out.robust_ple = out.e_eps_norm <= tol;
  out.robust_ore = out.e_f_norm <= tol;

  const auto [theta, phi] = seq.target;
  const Matrix2 elementary_eps =
      Complex{0.0, -theta / 2.0} * (axis_dot_sigma(phi) * target.matrix());
  const Matrix2 elementary_f =
      Complex{0.0, -std::sin(theta / 2.0)} * Matrix2::pauli_z();

  if (out.robust_ore &&
      max_abs_diff(phase * errs.e_eps, elementary_eps) <= tol) {
    out.rep = RepKind::REP_PLE;
  } else if (out.robust_ple &&
             max_abs_diff(phase * errs.e_f, elementary_f) <= tol) {
    out.rep = RepKind::REP_ORE;
  }
  return out;
}

double time_cost(const PulseSequence& seq) {
  double total = 0.0;
  for (const RotationParams& p : seq.pulses) {
    if (p.theta < 0.0) {
      throw InvalidSequence("time_cost: negative pulse angle " +
                            std::to_string(p.theta));
    }
    total += p.theta;
  }
  return total / kPi;
}

std::vector<double> linspace(const AxisRange& range, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = range.min;
    return out;
  }
  const double step = (range.max - range.min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = range.min + step * static_cast<double>(i);
  }
  out.back() = range.max;
  return out;
}

FidelityMap fidelity_map(const PulseSequence& seq, const AxisRange& eps_range,
                         const AxisRange& f_range, std::size_t eps_resolution,
                         std::size_t f_resolution, unsigned threads) {
  if (eps_resolution < 2 || f_resolution < 2) {
    throw InvalidParameter("fidelity_map: resolution must be >= 2 per axis");
  }
  FidelityMap map;
  map.eps_axis = linspace(eps_range, eps_resolution);
  map.f_axis = linspace(f_range, f_resolution);
  map.values.assign(eps_resolution * f_resolution, 0.0);
  const Unitary2 target = target_unitary(seq);
  parallel_for(eps_resolution, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < f_resolution; ++j) {
      const Unitary2 u =
          sequence_with_errors(seq, {map.eps_axis[i], map.f_axis[j]});
      map.values[i * f_resolution + j] = fidelity(target, u);
    }
  });
  return map;
}

RobustnessFit robustness_order(const PulseSequence& seq, FitAxis axis) {
  constexpr int kSamples = 20;
  constexpr double kFloor = 1e-13;
  const Unitary2 target = target_unitary(seq);
  std::vector<double> xs;
  std::vector<double> ys;
  for (int j = 0; j < kSamples; ++j) {
    const double log_s = -3.0 + 2.0 * j / (kSamples - 1);
    const double s = std::pow(10.0, log_s);
    const double inf =
        infidelity(target, sequence_with_errors(seq, strengths_for(axis, s)));
    if (inf > kFloor) {
      xs.push_back(log_s);
      ys.push_back(std::log10(inf));
    }
  }
  if (xs.size() < 3) {
    throw DomainError("robustness_order: fewer than 3 samples above the "
                      "1e-13 infidelity floor on the " +
                      std::string(to_string(axis)) + " axis");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  RobustnessFit fit;
  fit.axis = axis;
  fit.slope = sxy / sxx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.samples_used = xs.size();
  return fit;
}

NoGoReport n2_no_go_scan(std::size_t resolution, double robust_tol,
                         double trivial_tol, unsigned threads) {
  if (resolution < 8) {
    throw InvalidParameter("n2_no_go_scan: resolution must be >= 8");
  }
  constexpr std::size_t kMaxExamples = 10;
  const std::size_t r = resolution;
  std::vector<double> thetas(r), phis(r);
  for (std::size_t j = 0; j < r; ++j) {
    thetas[j] = kTwoPi * static_cast<double>(j + 1) / static_cast<double>(r);
    phis[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(r);
  }

  // One partial report per first-pulse angle; merged in index order.
  std::vector<NoGoReport> partial(r);
  parallel_for(r, threads, [&](std::size_t a) {
    NoGoReport& rep = partial[a];
    PulseSequence seq{{{}, {}}, {0.0, 0.0}, "pair"};
    seq.pulses[0].theta = thetas[a];
    for (double phi1 : phis) {
      seq.pulses[0].phi = phi1;
      for (double theta2 : thetas) {
        seq.pulses[1].theta = theta2;
        for (double phi2 : phis) {
          seq.pulses[1].phi = phi2;
          ++rep.pairs_scanned;
          const FirstOrderErrors errs = first_order_errors(seq);
          const bool ple = errs.e_eps.max_abs() <= robust_tol;
          const bool ore = errs.e_f.max_abs() <= robust_tol;
          if (!ple && !ore) continue;
          rep.ple_robust_pairs += ple ? 1 : 0;
          rep.ore_robust_pairs += ore ? 1 : 0;
          const Unitary2 u = product(seq);
          if (is_trivial(u, trivial_tol)) continue;
          ++rep.violations;
          if (rep.examples.size() < kMaxExamples) {
            rep.examples.push_back({seq.pulses[0], seq.pulses[1],
                                    ple ? ErrorAxis::PLE : ErrorAxis::ORE,
                                    std::abs(u.trace()) / 2.0});
          }
        }
      }
    }
  });

  NoGoReport total;
  total.resolution = r;
  for (const NoGoReport& rep : partial) {
    total.pairs_scanned += rep.pairs_scanned;
    total.ple_robust_pairs += rep.ple_robust_pairs;
    total.ore_robust_pairs += rep.ore_robust_pairs;
    total.violations += rep.violations;
    for (const NoGoViolation& v : rep.examples) {
      if (total.examples.size() < kMaxExamples) total.examples.push_back(v);
    }
  }
  return total;
}

}  // namespace ccpulse
