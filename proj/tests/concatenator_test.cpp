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

#include "ccpulse/concatenator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccpulse/analysis.hpp"
#include "ccpulse/catalog.hpp"
#include "ccpulse/error_models.hpp"
#include "ccpulse/errors.hpp"
#include "ccpulse/pulse_library.hpp"

using namespace ccpulse;

namespace {

constexpr double kThetas[] = {kPi / 6, kPi / 2, kPi, 3 * kPi / 2};
constexpr double kPhis[] = {0.0, kPi / 4};

bool same_pulses(const PulseSequence& a, const PulseSequence& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.pulses[i].theta - b.pulses[i].theta) > tol ||
        !same_phase(a.pulses[i].phi, b.pulses[i].phi, tol)) {
      return false;
    }
  }
  return true;
}

void expect_doubly_robust(const PulseSequence& seq) {
  const FirstOrderErrors errs = first_order_errors(seq);
  EXPECT_LE(errs.e_eps.max_abs(), 1e-6) << seq.label;
  EXPECT_LE(errs.e_f.max_abs(), 1e-6) << seq.label;
  EXPECT_GE(fidelity(target_unitary(seq), product(seq)), 1 - 1e-10)
      << seq.label;
}

}  // namespace

TEST(NamedCccp, PulseCountsAndCosts) {
  const RotationParams pi{kPi, 0.0};
  EXPECT_EQ(named_cccp(CccpName::CinS, pi).size(), 9u);
  EXPECT_EQ(named_cccp(CccpName::CinSK, pi).size(), 9u);
  EXPECT_EQ(named_cccp(CccpName::SKinsC, pi).size(), 9u);
  EXPECT_EQ(named_cccp(CccpName::CinBB, pi).size(), 12u);
  EXPECT_EQ(named_cccp(CccpName::BBinsC, pi).size(), 12u);
  EXPECT_NEAR(time_cost(named_cccp(CccpName::CinS, pi)), 13.0, 1e-9);
  EXPECT_NEAR(time_cost(named_cccp(CccpName::CinBB, pi)), 19.0, 1e-12);
  EXPECT_NEAR(time_cost(named_cccp(CccpName::SKinsC, pi)), 43.0 / 3.0, 1e-12);
  EXPECT_NEAR(time_cost(named_cccp(CccpName::BBinsC, pi)), 43.0 / 3.0, 1e-12);
}

TEST(NamedCccp, CinSkAngles) {
  const PulseSequence seq = named_cccp(CccpName::CinSK, {kPi, 0.0});
  EXPECT_NEAR(seq.pulses[3].theta, 3 * kPi, 1e-12);
  EXPECT_NEAR(seq.pulses[6].theta, 3 * kPi, 1e-12);
  EXPECT_NEAR(seq.pulses[4].theta, kTwoPi, 1e-12);
  EXPECT_NEAR(seq.pulses[7].theta, kTwoPi, 1e-12);
  EXPECT_NEAR(seq.pulses[5].theta, kPi, 1e-12);
  EXPECT_NEAR(seq.pulses[8].theta, kPi, 1e-12);
}

TEST(NamedCccp, CinSkCostFormula) {
  for (double theta = 0.05; theta < kTwoPi; theta += 0.31) {
    const double k = corpse_k(theta);
    EXPECT_NEAR(time_cost(named_cccp(CccpName::CinSK, {theta, 0.0})),
                16.0 + (theta - 4 * k) / kPi, 1e-12);
  }
}

TEST(NamedCccp, NameParsing) {
  EXPECT_EQ(parse_cccp_name("SKinsC"), CccpName::SKinsC);
  EXPECT_EQ(parse_cccp_name("skinsc"), std::nullopt);
  EXPECT_STREQ(to_string(CccpName::BBinsC), "BBinsC");
}

TEST(NamedCccp, DoublyRobustOnSweep) {
  for (CccpName name : {CccpName::CinS, CccpName::CinSK, CccpName::SKinsC,
                        CccpName::CinBB, CccpName::BBinsC}) {
    for (double theta : kThetas) {
      for (double phi : kPhis) {
        expect_doubly_robust(named_cccp(name, {theta, phi}));
      }
    }
  }
}

TEST(Concatenate, RejectsInnerWithoutMatchingRep) {
  // SCROFULOUS is not REP and BB1 cancels the same error as SK1.
  const CccpRecipe bad_inner{{"SK1", &sk1}, {"SCROFULOUS", &scrofulous},
                             SkipRule::None, ""};
  EXPECT_THROW(concatenate(bad_inner, {kPi / 2, 0.0}), RecipeError);
  const CccpRecipe same_axis{{"SK1", &sk1}, {"BB1", &bb1}, SkipRule::None, ""};
  try {
    concatenate(same_axis, {kPi / 2, 0.0});
    FAIL() << "expected RecipeError";
  } catch (const RecipeError& e) {
    EXPECT_NE(std::string(e.what()).find("PLE"), std::string::npos);
  }
  const CccpRecipe short_inner{
      {"SK1", &sk1}, {"short CORPSE", &short_corpse}, SkipRule::None, ""};
  EXPECT_THROW(concatenate(short_inner, {kPi / 2, 0.0}), RecipeError);
}

TEST(Concatenate, RejectsNonRobustOuter) {
  const CccpRecipe recipe{{"elementary", &elementary},
                          {"CORPSE", [](const RotationParams& t) {
                             return corpse(t);
                           }},
                          SkipRule::None,
                          ""};
  EXPECT_THROW(concatenate(recipe, {kPi / 2, 0.0}), RecipeError);
}

TEST(ExemptPulses, Patterns) {
  EXPECT_EQ(exempt_pulses(sk1({kPi, 0.0}), SkipRule::FullRotations),
            (std::vector<bool>{false, true, true}));
  EXPECT_EQ(exempt_pulses(bb1({kPi, 0.0}), SkipRule::TrivialTriples),
            (std::vector<bool>{true, true, true, false}));
  EXPECT_EQ(exempt_pulses(modified_short_corpse({kPi, 0.0}),
                          SkipRule::TrivialPairs),
            (std::vector<bool>{true, true, false, true, true}));
  EXPECT_EQ(exempt_pulses(bb1({kPi, 0.0}), SkipRule::None),
            (std::vector<bool>(4, false)));
}

TEST(Reduced, CountsAndCosts) {
  const RotationParams pi{kPi, 0.0};
  EXPECT_EQ(reduced_cinsk(pi).size(), 5u);
  EXPECT_EQ(reduced_cinbb(pi).size(), 6u);
  EXPECT_EQ(reduced_skinsc(pi).size(), 6u);
  EXPECT_NEAR(time_cost(reduced_cinsk(pi)), 25.0 / 3.0, 1e-12);
  EXPECT_NEAR(time_cost(reduced_cinbb(pi)), 25.0 / 3.0, 1e-12);
  EXPECT_NEAR(time_cost(reduced_skinsc(pi)), 19.0 / 3.0, 1e-12);
}

TEST(Reduced, DoublyRobustOnSweep) {
  for (double theta : kThetas) {
    for (double phi : kPhis) {
      const RotationParams t{theta, phi};
      expect_doubly_robust(reduced_cinsk(t));
      expect_doubly_robust(reduced_cinbb(t));
      expect_doubly_robust(reduced_skinsc(t));
    }
  }
}

TEST(Reduced, ClosedFormsMatchConcatenation) {
  for (double theta : kThetas) {
    for (double phi : kPhis) {
      const RotationParams t{theta, phi};
      EXPECT_TRUE(same_pulses(reduced_cinsk(t),
                              reduced_via_concatenation(ReducedName::CinSK, t),
                              1e-12));
      EXPECT_TRUE(same_pulses(reduced_cinbb(t),
                              reduced_via_concatenation(ReducedName::CinBB, t),
                              1e-12));
      EXPECT_TRUE(same_pulses(reduced_skinsc(t),
                              reduced_via_concatenation(ReducedName::SKinsC, t),
                              1e-12));
    }
  }
}

TEST(Reduced, PrintedSkinscPhasesLeaveFirstOrderPle) {
  // Using phi -/+ arccos[-theta/(4pi)] for the two 2pi pulses (instead of the
  // phases of SK1 applied to R(2pi - theta, phi + pi)) leaves |e_eps| = pi.
  PulseSequence seq = reduced_skinsc({kPi, 0.0});
  const double s = correction_phase(kPi);
  seq.pulses[2].phi = -s;
  seq.pulses[3].phi = s;
  EXPECT_NEAR(first_order_errors(seq).e_eps.max_abs(), kPi, 1e-8);
}

TEST(ModifiedShortCorpse, EqualsShortCorpse) {
  for (double theta : kThetas) {
    const RotationParams t{theta, 0.6};
    const PulseSequence m = modified_short_corpse(t);
    ASSERT_EQ(m.size(), 5u);
    EXPECT_LE(max_abs_diff(product(m).matrix(),
                           product(short_corpse(t)).matrix()),
              1e-14);
    // Same under errors, because the middle three pulses share one axis.
    EXPECT_LE(max_abs_diff(sequence_with_errors(m, {0.2, 0.3}).matrix(),
                           sequence_with_errors(short_corpse(t), {0.2, 0.3})
                               .matrix()),
              1e-13);
    const PulseSequence head{{m.pulses[0], m.pulses[1]}, {}, ""};
    const PulseSequence tail{{m.pulses[3], m.pulses[4]}, {}, ""};
    EXPECT_TRUE(is_robust(head, ErrorAxis::PLE));
    EXPECT_TRUE(is_robust(tail, ErrorAxis::PLE));
  }
  const PulseSequence pi = modified_short_corpse({kPi, 0.0});
  EXPECT_NEAR(pi.pulses[0].theta, kPi / 3, 1e-12);
  EXPECT_NEAR(pi.pulses[2].theta, kPi, 1e-12);
  EXPECT_NEAR(pi.pulses[4].theta, kPi / 3, 1e-12);
}

TEST(MergeSameAxis, Examples) {
  const PulseSequence two{{{0.4, 1.0}, {0.9, 1.0 + kTwoPi}}, {1.3, 1.0}, ""};
  const PulseSequence merged = merge_same_axis(two);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_NEAR(merged.pulses[0].theta, 1.3, 1e-15);

  const PulseSequence opposite{{{0.4, 1.0}, {0.4, 1.0 + kPi}}, {}, ""};
  EXPECT_EQ(merge_same_axis(opposite).size(), 2u);
}

TEST(MergeSameAxis, ReducedSkinscFromSevenToSix) {
  const PulseSequence unmerged = concatenate(
      {{"modified short CORPSE", &modified_short_corpse},
       {"SK1", &sk1},
       SkipRule::TrivialPairs,
       ""},
      {kPi, 0.0});
  EXPECT_EQ(unmerged.size(), 7u);
  EXPECT_EQ(merge_same_axis(unmerged).size(), 6u);
}

// Property: merging leaves the perturbed propagator unchanged.
TEST(MergeSameAxis, ExactUnderErrors) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> axis(0, 2);
  std::uniform_real_distribution<double> err(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    PulseSequence seq;
    for (int i = 0; i < 10; ++i) {
      seq.pulses.push_back({angle(rng), axis(rng) * kPi / 3});
    }
    const PulseSequence merged = merge_same_axis(seq);
    EXPECT_LE(merged.size(), seq.size());
    const ErrorStrengths e{err(rng), err(rng)};
    EXPECT_LE(max_abs_diff(sequence_with_errors(seq, e).matrix(),
                           sequence_with_errors(merged, e).matrix()),
              1e-12);
  }
  const PulseSequence unmerged = concatenate(
      {{"modified short CORPSE", &modified_short_corpse},
       {"SK1", &sk1},
       SkipRule::TrivialPairs,
       ""},
      {kPi, 0.0});
  EXPECT_LE(max_abs_diff(sequence_with_errors(unmerged, {0.2, 0.3}).matrix(),
                         sequence_with_errors(merge_same_axis(unmerged),
                                              {0.2, 0.3})
                             .matrix()),
            1e-12);
}

// No two-pulse sequence the library can build is both non-trivial and
// robust on an axis.
TEST(MinimumLength, NoNonTrivialTwoPulseRobustSequence) {
  for (double theta : kThetas) {
    for (double phi : kPhis) {
      const PulseSequence pair = trivial_pair(theta, phi);
      ASSERT_EQ(pair.size(), 2u);
      if (is_robust(pair, ErrorAxis::PLE) || is_robust(pair, ErrorAxis::ORE)) {
        EXPECT_TRUE(is_trivial(product(pair), 1e-9));
      }
    }
  }
  EXPECT_GE(reduced_cinsk({kPi, 0.0}).size(), 5u);
}

TEST(Catalog, AcceptsDisplayNames) {
  ASSERT_NE(find_entry("CinSK"), nullptr);
  EXPECT_EQ(find_entry("CinSK")->key, "cinsk");
  EXPECT_EQ(find_entry("short CORPSE")->key, "short-corpse");
  EXPECT_EQ(find_entry("nope"), nullptr);
  EXPECT_EQ(build_named("CORPSE", {kPi, 0.0}).label, "CORPSE");
}
