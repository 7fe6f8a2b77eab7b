#include <cmath>

#include <gtest/gtest.h>

#include "msg/analytic.hpp"
#include "msg/game.hpp"

namespace msg {
namespace {

using analytic::Coefficients;
using analytic::FormulaOptions;
using analytic::NuPrefactor;

double pipeline(const ModelParams& p) { return win_probability(effective_state(p)).average; }

const FormulaOptions kExact{Coefficients::rational, NuPrefactor::cubic};

TEST(DbZeroFormula, LowTemperatureZeroField) {
  EXPECT_NEAR(analytic::pw_formula_db_zero(0.0, 0.01), 1.0, 5e-3);
}

TEST(DbZeroFormula, MatchesPipeline) {
  EXPECT_NEAR(analytic::pw_formula_db_zero(0.5, 0.1), pipeline({0, 0.5, 0, 0, 0.1}), 5e-3);
}

TEST(DbZeroFormula, PostTransitionPlateau) {
  // Above the B = 1 level crossing the ground state is |11>, and the pipeline
  // gives exactly 5/9 on the plateau.
  const double pw = pipeline({0, 2, 0, 0, 0.01});
  EXPECT_NEAR(pw, 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(analytic::pw_formula_db_zero(2.0, 0.01), pw, 5e-3);
  EXPECT_NEAR(analytic::pw_formula_db_zero(2.0, 0.01, {Coefficients::rational}), pw, 1e-12);
}

TEST(DbZeroFormula, RationalCoefficientsAreExact) {
  for (double T : {0.1, 0.5, 1.0})
    for (double B : {0.0, 0.4, 1.0, 1.7, 3.0})
      EXPECT_NEAR(analytic::pw_formula_db_zero(B, T, {Coefficients::rational}), pipeline({0, B, 0, 0, T}), 1e-12);
}

TEST(BZeroFormula, LowTemperatureNuOne) {
  EXPECT_NEAR(analytic::pw_formula_b_zero(1.0, 0.01), 1.0, 5e-3);
}

TEST(BZeroFormula, PrintedPrefactorAgreesOnlyAtNuOne) {
  // nu^{3/2} and nu^3 coincide at nu = 1.
  for (double T : {0.1, 0.5, 1.0})
    EXPECT_NEAR(analytic::pw_formula_b_zero(1.0, T), pipeline({0, 0, 0, 0, T}), 5e-3);
  const double nu = std::sqrt(1.25);
  const double printed = analytic::pw_formula_b_zero(nu, 0.1);
  EXPECT_GT(std::abs(printed - pipeline({0, 0, 0, 0.5, 0.1})), 0.1);
}

TEST(BZeroFormula, CubicPrefactorMatchesPipelineForDAndB) {
  const double nu = std::sqrt(1.25);
  const double formula = analytic::pw_formula_b_zero(nu, 0.1, {Coefficients::printed, NuPrefactor::cubic});
  EXPECT_NEAR(formula, pipeline({0, 0, 0, 0.5, 0.1}), 5e-3);
  EXPECT_NEAR(formula, pipeline({0, 0, 0.5, 0, 0.1}), 5e-3);
}

TEST(BZeroFormula, RationalCoefficientsWithCubicPrefactorAreExact) {
  for (double T : {0.1, 0.5, 1.0})
    for (double D : {0.0, 0.5, 1.5, 3.0})
      EXPECT_NEAR(analytic::pw_formula_b_zero(analytic::nu_of(0, D), T, kExact), pipeline({0, 0, 0, D, T}), 1e-12);
}

TEST(BZeroFormula, DependsOnlyOnNu) {
  EXPECT_DOUBLE_EQ(analytic::nu_of(0.3, 0.4), analytic::nu_of(0.5, 0.0));
  EXPECT_DOUBLE_EQ(analytic::nu_of(0.3, 0.4), std::sqrt(1.25));
}

TEST(Formulas, DomainErrors) {
  EXPECT_THROW(analytic::pw_formula_db_zero(0.0, 0.0), NonPositiveTemperature);
  EXPECT_THROW(analytic::pw_formula_b_zero(1.0, -1.0), NonPositiveTemperature);
  EXPECT_THROW(analytic::pw_formula_b_zero(0.9, 1.0), DomainError);
}

TEST(Formulas, StableAtVeryLowTemperature) {
  for (double B : {0.0, 0.5, 2.0, 3.0})
    EXPECT_NEAR(analytic::pw_formula_db_zero(B, 1e-3, {Coefficients::rational}), pipeline({0, B, 0, 0, 1e-3}), 1e-12);
  for (double D : {0.0, 1.0, 3.0})
    EXPECT_NEAR(analytic::pw_formula_b_zero(analytic::nu_of(0, D), 1e-3, kExact), pipeline({0, 0, 0, D, 1e-3}), 1e-12);
}

}  // namespace
}  // namespace msg
