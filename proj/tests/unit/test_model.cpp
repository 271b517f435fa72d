// Copyright 2026 The facemill Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "facemill/error.hpp"
#include "facemill/model.hpp"

namespace facemill {
namespace {

const Model& reference_model() {
  static const Model m{ProblemData{}};
  return m;
}

Plan six_mm_plan() {
  Plan p;
  p.finish = {122.23, 0.2791, 2.0};
  p.rough = {60.12, 0.3187, 4.0};
  p.rough_passes = 1;
  return p;
}

TEST(Coefficients, ExponentsFollowFromTaylorConstants) {
  const auto& c = reference_model().coefficients();
  EXPECT_DOUBLE_EQ(c.n1, 1.0 / 0.32);
  EXPECT_DOUBLE_EQ(c.n2, 0.15 / 0.32);
  EXPECT_DOUBLE_EQ(c.n3, 0.35 / 0.32);
  EXPECT_DOUBLE_EQ(c.n4, 0.9);
  EXPECT_DOUBLE_EQ(c.n5, 0.74);
}

TEST(Coefficients, DerivedValuesMatchReference) {
  const auto& c = reference_model().coefficients();
  EXPECT_NEAR(c.C0 / 253337816.7, 1.0, 1e-6);
  EXPECT_DOUBLE_EQ(c.C1, 545.0);
  EXPECT_NEAR(c.C2, 0.1113154, 1e-7);
  EXPECT_NEAR(c.finish.a, 6.330309, 1e-6);
  EXPECT_NEAR(c.rough.a, 4.09271, 1e-6);
  EXPECT_NEAR(c.finish.c, 0.29105, 1e-12);
  EXPECT_NEAR(c.rough.c, 0.2411925, 1e-12);
  EXPECT_DOUBLE_EQ(c.preparation_cost, 0.375);
}

TEST(Coefficients, ToolCostTermsAreSwappedAgainstTheirPrintedLabels) {
  const auto& c = reference_model().coefficients();
  EXPECT_NEAR(c.finish.b / 2.598712e-6, 1.0, 1e-5);
  EXPECT_NEAR(c.rough.b / 1.680135e-6, 1.0, 1e-5);
  ASSERT_EQ(c.consistency.warnings.size(), 1u);
  EXPECT_NE(c.consistency.warnings[0].find("swapped"), std::string::npos);
  int swapped = 0;
  for (const auto& check : c.consistency.checks) {
    swapped += check.status == "swapped";
  }
  EXPECT_EQ(swapped, 2);
}

TEST(Coefficients, MismatchIsReportedPerCoefficient) {
  ProblemData p;
  p.reference.C1 = 600.0;
  const auto c = derive_coefficients(p);
  ASSERT_EQ(c.consistency.warnings.size(), 2u);
  EXPECT_EQ(c.consistency.warnings[0].rfind("C1", 0), 0u);
}

TEST(Coefficients, GeometricTravelWhenUnset) {
  ProblemData p;
  p.L_tr.reset();
  p.L_ts.reset();
  EXPECT_DOUBLE_EQ(rough_travel(p), geometric_rough_travel(p));
  EXPECT_DOUBLE_EQ(finish_travel(p), 563.0);
  const Model m{p};
  EXPECT_GT(m.coefficients().rough.a, reference_model().coefficients().rough.a);
}

TEST(Model, ToolLifeAtReferencePlan) {
  const auto& m = reference_model();
  const auto p = six_mm_plan();
  EXPECT_NEAR(m.tool_life(PassKind::finish, p.finish.speed, p.finish.feed, p.finish.depth), 222.0, 0.5);
  EXPECT_NEAR(m.tool_life(PassKind::rough, p.rough.speed, p.rough.feed, p.rough.depth), 1274.2, 0.5);
}

TEST(Model, UnitCostAtReferencePlan) {
  EXPECT_NEAR(reference_model().unit_cost(six_mm_plan()), 1.41077, 5e-5);
}

TEST(Model, BreakdownSumsToUnitCost) {
  const auto& m = reference_model();
  const auto p = six_mm_plan();
  const auto b = m.cost_breakdown(p);
  EXPECT_NEAR(b.total(), m.unit_cost(p), 1e-12);
  EXPECT_GT(b.machining, 0.0);
  EXPECT_GT(b.idle, 0.0);
  EXPECT_GT(b.tool_replacement, 0.0);
  EXPECT_GT(b.tool, 0.0);
}

TEST(Model, ForceAndPowerLaws) {
  const auto& m = reference_model();
  EXPECT_NEAR(m.cutting_force(1.0, 1.0), 545.0, 1e-9);
  EXPECT_NEAR(m.cutting_force(4.0, 0.3187), 545.0 * std::pow(4.0, 0.9) * std::pow(0.3187, 0.74), 1e-9);
  EXPECT_NEAR(m.cutting_power(60.0, 4.0, 0.3), m.cutting_force(4.0, 0.3) * 60.0 / (6120.0 * 0.8), 1e-9);
}

TEST(Model, CapsAreWhereConstraintsBind) {
  const auto& m = reference_model();
  EXPECT_NEAR(m.surface_feed_cap(PassKind::finish), 0.279073, 1e-6);
  EXPECT_DOUBLE_EQ(m.feed_upper_bound(PassKind::finish), m.surface_feed_cap(PassKind::finish));
  EXPECT_DOUBLE_EQ(m.feed_upper_bound(PassKind::rough), 0.6);
  const double f = m.force_feed_cap(4.0);
  EXPECT_NEAR(f, 0.31951, 1e-5);
  EXPECT_NEAR(m.cutting_force(4.0, f), 815.77, 1e-9);
  const double v = m.power_speed_cap(4.0, f);
  EXPECT_NEAR(v, 60.0169, 1e-4);
  EXPECT_NEAR(m.cutting_power(v, 4.0, f), 10.0, 1e-9);
}

TEST(Model, RejectsNonPositiveInputs) {
  const auto& m = reference_model();
  EXPECT_THROW(m.tool_life(PassKind::finish, 0.0, 0.2, 1.0), InvalidInput);
  EXPECT_THROW(m.pass_cost(PassKind::rough, 60.0, -0.1, 1.0), InvalidInput);
  EXPECT_THROW(m.cutting_force(0.0, 0.3), InvalidInput);
}

TEST(Model, PrintedModeUsesPrintedCoefficients) {
  const Model printed{ProblemData{}, CoefficientSource::printed};
  const auto p = six_mm_plan();
  EXPECT_NE(printed.unit_cost(p), reference_model().unit_cost(p));
  EXPECT_EQ(printed.source(), CoefficientSource::printed);
}

TEST(Constraints, PrintedFinishFeedIsRoundedPastTheSurfaceCap) {
  const auto r = reference_model().constraint_report(six_mm_plan(), 6.0);
  EXPECT_FALSE(r.feasible());
  EXPECT_LT(r[Constraint::surface_finish], 0.0);
  EXPECT_LT(r.violation, 1e-4);
  EXPECT_DOUBLE_EQ(r.violation, -r[Constraint::surface_finish]);
}

TEST(Constraints, ReferencePlanAtSurfaceCapIsFeasible) {
  Plan p = six_mm_plan();
  p.finish.feed = reference_model().surface_feed_cap(PassKind::finish);
  const auto r = reference_model().constraint_report(p, 6.0);
  EXPECT_TRUE(r.feasible());
  EXPECT_NEAR(r.depth_residual, 0.0, 1e-12);
  for (double s : r.slack) {
    EXPECT_GE(s, 0.0);
  }
}

TEST(Constraints, ViolationIsSumOfNegativeSlacks) {
  Plan p = six_mm_plan();
  p.rough.speed = 120.0; // power over the limit
  p.finish.feed = 0.35;  // surface over the limit
  const auto r = reference_model().constraint_report(p);
  EXPECT_LT(r[Constraint::power_rough], 0.0);
  EXPECT_LT(r[Constraint::surface_finish], 0.0);
  double sum = 0.0;
  for (double s : r.slack) {
    sum += s < 0.0 ? -s : 0.0;
  }
  EXPECT_DOUBLE_EQ(r.violation, sum);
  EXPECT_FALSE(r.feasible());
}

TEST(Constraints, DepthBoundsAreChecked) {
  Plan p = six_mm_plan();
  p.rough.depth = 4.5;
  const auto r = reference_model().constraint_report(p, 6.5);
  EXPECT_LT(r[Constraint::depth_rough_max], 0.0);
  EXPECT_NEAR(r.depth_residual, 0.0, 1e-12);
}

TEST(ProblemValidation, NamesTheOffendingKey) {
  ProblemData p;
  p.d_s.step = 0.0;
  try {
    validate(p);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("d_s_step"), std::string::npos);
  }
  EXPECT_NO_THROW(validate(ProblemData{}));
}

} // namespace
} // namespace facemill
