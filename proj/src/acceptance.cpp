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

#include "ccpulse/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string_view>

#include "ccpulse/analysis.hpp"
#include "ccpulse/catalog.hpp"
#include "ccpulse/concatenator.hpp"
#include "ccpulse/error_models.hpp"
#include "ccpulse/errors.hpp"
#include "ccpulse/pulse_library.hpp"
#include "ccpulse/serialization.hpp"

namespace ccpulse {

namespace {

struct TableRow {
  std::string_view key;
  std::size_t n;
  double t_half_pi;
  double t_pi;
};

// Published pulse counts and time costs (one decimal).
constexpr std::array<TableRow, 14> kTimeCostTable{{
    {"elementary", 1, 0.5, 1.0},
    {"scrofulous", 3, 2.3, 3.0},
    {"sk1", 3, 4.5, 5.0},
    {"bb1", 4, 4.5, 5.0},
    {"short-corpse", 3, 2.0, 2.3},
    {"corpse", 3, 4.0, 4.3},
    {"cins", 9, 12.5, 13.0},
    {"cinsk", 9, 16.0, 16.3},
    {"cinbb", 12, 18.7, 19.0},
    {"skinsc", 9, 14.0, 14.3},
    {"bbinsc", 12, 14.0, 14.3},
    {"reduced-cinsk", 5, 8.0, 8.3},
    {"reduced-cinbb", 6, 8.0, 8.3},
    {"reduced-skinsc", 6, 6.0, 6.3},
}};

constexpr double kTimeCostTol = 0.05;

struct RepExpectation {
  std::string_view key;
  RepKind rep;
  bool robust_ple;
  bool robust_ore;
};

constexpr std::array<RepExpectation, 5> kRepTable{{
    {"sk1", RepKind::REP_ORE, true, false},
    {"bb1", RepKind::REP_ORE, true, false},
    {"scrofulous", RepKind::NONE, true, false},
    {"corpse", RepKind::REP_PLE, false, true},
    {"short-corpse", RepKind::NONE, false, true},
}};

constexpr std::array<std::string_view, 8> kDoublyRobust{
    "cins",          "cinsk",         "skinsc",        "cinbb",
    "bbinsc",        "reduced-cinsk", "reduced-cinbb", "reduced-skinsc"};

constexpr std::array<double, 4> kSweepThetas{kPi / 6.0, kPi / 2.0, kPi,
                                             3.0 * kPi / 2.0};
constexpr std::array<double, 2> kSweepPhis{0.0, kPi / 4.0};

std::string fmt(double v, int digits = 6) { return format_general(v, digits); }

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ - failures_ << "/" << checks_ << " checks";
    if (!first_failure_.empty()) s << "; first failure: " << first_failure_;
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

std::string where(std::string_view key, const RotationParams& t) {
  return std::string(key) + "(" + fmt(t.theta) + ", " + fmt(t.phi) + ")";
}

CriterionResult time_cost_table(const AcceptanceOptions&) {
  Checker c;
  double worst = 0.0;
  for (const TableRow& row : kTimeCostTable) {
    for (const auto& [theta, expected] :
         {std::pair{kPi / 2.0, row.t_half_pi}, std::pair{kPi, row.t_pi}}) {
      const PulseSequence seq = build_named(row.key, {theta, 0.0});
      const double t = time_cost(seq);
      worst = std::max(worst, std::abs(t - expected));
      c.expect(seq.size() == row.n,
               where(row.key, {theta, 0.0}) + " N=" + std::to_string(seq.size()) +
                   " expected " + std::to_string(row.n));
      c.expect(std::abs(t - expected) <= kTimeCostTol,
               where(row.key, {theta, 0.0}) + " T=" + fmt(t) + " expected " +
                   fmt(expected));
    }
  }
  return {1, "Time-cost table reproduction (N exact, T within 0.05)", c.ok(),
          c.summary() + "; max |T - published| = " + fmt(worst, 3), 0.0, 1.0};
}

CriterionResult rep_classification(const AcceptanceOptions&) {
  Checker c;
  for (const RepExpectation& e : kRepTable) {
    for (double theta : {kPi / 2.0, kPi}) {
      const RotationParams t{theta, 0.0};
      const RepClass cls = classify_rep(build_named(e.key, t));
      c.expect(cls.rep == e.rep && cls.robust_ple == e.robust_ple &&
                   cls.robust_ore == e.robust_ore,
               where(e.key, t) + " classified REP=" + to_string(cls.rep));
    }
  }
  return {2, "REP / robustness classification", c.ok(), c.summary(),
          0.0, 1.0};
}

CriterionResult first_order(const AcceptanceOptions&) {
  Checker c;
  double worst = 0.0;
  for (std::string_view key : kDoublyRobust) {
    for (double theta : kSweepThetas) {
      for (double phi : kSweepPhis) {
        const RotationParams t{theta, phi};
        const FirstOrderErrors errs = first_order_errors(build_named(key, t));
        const double m = std::max(errs.e_eps.max_abs(), errs.e_f.max_abs());
        worst = std::max(worst, m);
        c.expect(m <= 1e-6, where(key, t) + " first-order norm " + fmt(m));
      }
    }
  }
  return {3, "First-order cancellation of CCCPs and reduced CCCPs", c.ok(),
          c.summary() + "; max norm = " + fmt(worst, 3), 0.0, 5.0};
}

CriterionResult slopes(const AcceptanceOptions&) {
  Checker c;
  const RotationParams t{kPi, 0.0};
  auto near_two = [&](std::string_view key, FitAxis axis) {
    const RobustnessFit fit = robustness_order(build_named(key, t), axis);
    c.expect(std::abs(fit.slope - 2.0) <= 0.1,
             std::string(key) + " " + to_string(axis) + " slope " +
                 fmt(fit.slope, 4) + " not 2.0 +- 0.1");
  };
  auto at_least = [&](std::string_view key, FitAxis axis) {
    const RobustnessFit fit = robustness_order(build_named(key, t), axis);
    c.expect(fit.slope >= 3.5, std::string(key) + " " + to_string(axis) +
                                   " slope " + fmt(fit.slope, 4) + " < 3.5");
  };
  near_two("elementary", FitAxis::PLE);
  near_two("elementary", FitAxis::ORE);
  for (std::string_view key : {"bb1", "sk1", "scrofulous"}) {
    at_least(key, FitAxis::PLE);
    near_two(key, FitAxis::ORE);
  }
  for (std::string_view key : {"corpse", "short-corpse"}) {
    at_least(key, FitAxis::ORE);
    near_two(key, FitAxis::PLE);
  }
  for (std::string_view key : kDoublyRobust) {
    for (FitAxis axis : {FitAxis::PLE, FitAxis::ORE, FitAxis::DIAGONAL}) {
      at_least(key, axis);
    }
  }
  // Spot values standing in for the fidelity density plots.
  const FidelityMap map =
      fidelity_map(build_named("elementary", t), {0.0, 0.1}, {0.0, 0.1}, 2, 2);
  c.expect(std::abs(map.at(0, 0) - 1.0) <= 1e-12, "elementary F(0,0) != 1");
  c.expect(std::abs(map.at(1, 0) - std::cos(0.05 * kPi)) <= 1e-12,
           "elementary F(0.1,0) != cos(0.05 pi)");
  return {4, "Robustness-order fits (slope of log infidelity)", c.ok(),
          c.summary(), 0.0, 10.0};
}

CriterionResult cinsk_cost(const AcceptanceOptions& opts) {
  Checker c;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    double theta = dist(rng);
    while (theta == 0.0) theta = dist(rng);
    const double k = corpse_k(theta);
    const RotationParams t{theta, 0.0};
    const double full = time_cost(named_cccp(CccpName::CinSK, t));
    const double reduced = time_cost(reduced_cinsk(t));
    const double d_full = std::abs(full - (16.0 + (theta - 4.0 * k) / kPi));
    const double d_red = std::abs(reduced - (8.0 + (theta - 4.0 * k) / kPi));
    worst = std::max({worst, d_full, d_red});
    c.expect(d_full <= 1e-12, "CinSK T mismatch at theta=" + fmt(theta, 17));
    c.expect(d_red <= 1e-12,
             "reduced CinSK T mismatch at theta=" + fmt(theta, 17));
  }
  return {5, "CinSK time-cost closed forms", c.ok(),
          c.summary() + "; max deviation = " + fmt(worst, 3), 0.0, 1.0};
}

CriterionResult nogo(const AcceptanceOptions& opts) {
  const NoGoReport rep =
      n2_no_go_scan(opts.nogo_resolution, 1e-6, 1e-6, opts.threads);
  std::ostringstream s;
  s << "resolution " << rep.resolution << ": " << rep.pairs_scanned
    << " pairs, " << rep.ple_robust_pairs << " PLE-robust, "
    << rep.ore_robust_pairs << " ORE-robust, " << rep.violations
    << " violations";
  const bool ok = rep.violations == 0 && rep.ple_robust_pairs > 0 &&
                  rep.ore_robust_pairs > 0;
  return {6, "N=2 no-go scan", ok, s.str(), 0.0, 300.0};
}

CriterionResult dual_path(const AcceptanceOptions& opts) {
  Checker c;
  struct Pair {
    ReducedName name;
    PulseSequence (*closed)(const RotationParams&);
  };
  const std::array<Pair, 3> pairs{{{ReducedName::CinSK, &reduced_cinsk},
                                   {ReducedName::CinBB, &reduced_cinbb},
                                   {ReducedName::SKinsC, &reduced_skinsc}}};
  for (const Pair& p : pairs) {
    for (double theta : kSweepThetas) {
      for (double phi : kSweepPhis) {
        const RotationParams t{theta, phi};
        const PulseSequence a = p.closed(t);
        const PulseSequence b = reduced_via_concatenation(p.name, t);
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i) {
          equal = std::abs(a.pulses[i].theta - b.pulses[i].theta) <= 1e-12 &&
                  same_phase(a.pulses[i].phi, b.pulses[i].phi, 1e-12);
        }
        c.expect(equal, where(to_string(p.name), t) +
                            " closed form differs from concatenation");
      }
    }
  }
  // Merging is exact under both errors.
  std::mt19937_64 rng(opts.seed + 7);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  const PulseSequence unmerged = concatenate(
      {{"modified short CORPSE", &modified_short_corpse},
       {"SK1", &sk1},
       SkipRule::TrivialPairs,
       "reduced SKinsC"},
      {kPi, 0.0});
  const PulseSequence merged = merge_same_axis(unmerged);
  c.expect(unmerged.size() == 7 && merged.size() == 6,
           "reduced SKinsC merge did not go from 7 to 6 pulses");
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ErrorStrengths e{dist(rng), dist(rng)};
    const double d =
        max_abs_diff(sequence_with_errors(unmerged, e).matrix(),
                     sequence_with_errors(merged, e).matrix());
    worst = std::max(worst, d);
    c.expect(d <= 1e-12, "merge changed the perturbed propagator by " + fmt(d));
  }
  return {7, "Dual-path reduced CCCPs and exact same-axis merging", c.ok(),
          c.summary() + "; max merge deviation = " + fmt(worst, 3), 0.0, 0.0};
}

CriterionResult correctness_floor(const AcceptanceOptions& opts) {
  Checker c;
  double worst_fid = 0.0;
  double worst_unitarity = 0.0;
  for (const CatalogEntry& entry : catalog_entries()) {
    for (double theta : kSweepThetas) {
      for (double phi : kSweepPhis) {
        const RotationParams t{theta, phi};
        const PulseSequence seq = build_named(entry.key, t);
        const double inf = 1.0 - fidelity(target_unitary(seq), product(seq));
        worst_fid = std::max(worst_fid, inf);
        c.expect(inf <= 1e-10, where(entry.key, t) + " zero-error infidelity " +
                                   fmt(inf));
        for (const ErrorStrengths e :
             {ErrorStrengths{0.0, 0.0}, ErrorStrengths{1.0, 1.0},
              ErrorStrengths{-0.7, 0.3}}) {
          const double dev = sequence_with_errors(seq, e).unitarity_deviation();
          worst_unitarity = std::max(worst_unitarity, dev);
          c.expect(dev <= 1e-12, where(entry.key, t) + " unitarity drift " +
                                     fmt(dev));
        }
      }
    }
  }
  std::mt19937_64 rng(opts.seed + 11);
  std::uniform_real_distribution<double> angle(0.0, 4.0 * kPi);
  std::uniform_int_distribution<int> length(1, 100);
  for (int trial = 0; trial < 200; ++trial) {
    PulseSequence seq;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) seq.pulses.push_back({angle(rng), angle(rng)});
    const double dev = product(seq).unitarity_deviation();
    worst_unitarity = std::max(worst_unitarity, dev);
    c.expect(dev <= 1e-12, "random chain unitarity drift " + fmt(dev));
  }
  return {8, "Correctness floor (zero-error fidelity, unitarity)", c.ok(),
          c.summary() + "; max infidelity = " + fmt(worst_fid, 3) +
              ", max unitarity drift = " + fmt(worst_unitarity, 3),
          0.0, 0.0};
}

using CriterionFn = CriterionResult (*)(const AcceptanceOptions&);

constexpr std::array<CriterionFn, kCriterionCount> kCriteria{
    &time_cost_table, &rep_classification, &first_order,        &slopes,
    &cinsk_cost, &nogo, &dual_path, &correctness_floor};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw InvalidParameter("unknown acceptance criterion " + std::to_string(id));
  }
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = kCriteria[static_cast<std::size_t>(id - 1)](options);
  } catch (const std::exception& e) {
    result.id = id;
    result.title = "criterion " + std::to_string(id);
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (result.budget_seconds > 0.0 && result.seconds >= result.budget_seconds) {
    result.passed = false;
    result.detail += "; exceeded runtime budget of " +
                     fmt(result.budget_seconds) + " s";
  }
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << " ("
    << format_fixed(r.seconds, 3) << " s";
  if (r.budget_seconds > 0.0) s << " / budget " << fmt(r.budget_seconds) << " s";
  s << "): " << r.detail;
  return s.str();
}

}  // namespace ccpulse
