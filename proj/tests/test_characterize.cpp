#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "extropy/characterize.hpp"
#include "extropy/error.hpp"
#include "extropy/measures.hpp"
#include "oracle.hpp"

using namespace extropy;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no extropy::Error thrown";
  return ErrorCode::Schema;
}

Curve residual_curve(const DistributionModel& d, int n, double lo, double hi,
                     int steps = 40) {
  const auto grid = closed_grid(lo, hi, steps);
  return curve(d, MeasureKind::dcrex_min(n, 0), grid);
}

}  // namespace

TEST(GpdRatio, Exponential) {
  const auto grid = closed_grid(0.0, 4.0, 30);
  const auto r = gpd_ratio_test(exponential(1), 1, grid);
  EXPECT_EQ(r.model, Model::Exponential);
  EXPECT_NEAR(r.c_hat, 0.25, 1e-9);
  EXPECT_NEAR(r.recovered_params.at("lambda"), 0.0, 1e-9);
  EXPECT_NEAR(r.recovered_params.at("theta"), 1.0, 1e-8);
}

TEST(GpdRatio, LomaxAndFiniteRange) {
  const auto grid = closed_grid(0.0, 2.0, 30);
  const auto l = gpd_ratio_test(gpd(1, 1), 1, grid);
  EXPECT_EQ(l.model, Model::ParetoII);
  EXPECT_NEAR(l.c_hat, 1.0 / 6, 1e-9);
  EXPECT_NEAR(l.recovered_params.at("lambda"), 1.0, 1e-7);

  const auto fgrid = closed_grid(0.0, 0.9, 30);
  const auto f = gpd_ratio_test(finite_range(1, 2), 1, fgrid);
  EXPECT_EQ(f.model, Model::PowerGPD);
  EXPECT_NEAR(f.c_hat, 0.3, 1e-9);
  EXPECT_NEAR(f.recovered_params.at("lambda"), -1.0 / 3, 1e-7);
  EXPECT_NEAR(f.recovered_params.at("theta"), 1.0 / 3, 1e-7);
}

TEST(GpdRatio, NonGpdIsNotConstant) {
  const auto grid = closed_grid(0.1, 4.0, 30);
  EXPECT_EQ(gpd_ratio_test(mixture_fig21(), 1, grid).model, Model::NotConstant);
  EXPECT_EQ(gpd_ratio_test(weibull(1, 2), 2, grid).model, Model::NotConstant);
}

TEST(GpdRatio, ConstantMatchesProofFormula) {
  // Constant 1/(2(2n(1+lambda) - lambda)) recomputed by brute force.
  for (double lambda : {-0.5, 0.5, 2.0}) {
    for (int n : {1, 2, 3}) {
      const DistributionModel d = gpd(1.5, lambda);
      const double t = d.quantile(0.4);
      const double st = d.sf(t);
      const double upper = d.support().bounded() ? d.support().upper : 0.0;
      const auto g = [&](double x) { return std::pow(d.sf(x) / st, 2 * n); };
      const double integral = d.support().bounded()
                                  ? oracle::simpson(g, t, upper, 1e-13)
                                  : oracle::simpson_to_infinity(g, t, 1e-13);
      const double ratio = -0.5 * integral / d.mean_residual_life(t).value;
      EXPECT_NEAR(ratio, -1.0 / (2 * (2 * n * (1 + lambda) - lambda)), 1e-8)
          << lambda << " " << n;
    }
  }
}

TEST(GpdSlope, RoundTrip) {
  for (double theta : {0.5, 1.0, 2.0}) {
    for (double lambda : {-0.5, 0.0, 1.0}) {
      const DistributionModel d = gpd(theta, lambda);
      const double hi = d.support().bounded() ? 0.9 * d.support().upper : 3.0 * theta;
      for (int n : {1, 3}) {
        const auto r = gpd_slope_test(residual_curve(d, n, 0.0, hi), n);
        const Model expect = lambda == 0.0  ? Model::Exponential
                             : lambda > 0.0 ? Model::ParetoII
                                            : Model::PowerGPD;
        EXPECT_EQ(r.model, expect) << theta << " " << lambda << " " << n;
        EXPECT_NEAR(r.recovered_params.at("theta"), theta, 1e-3 * theta);
        if (lambda == 0.0) {
          EXPECT_NEAR(r.recovered_params.at("lambda"), 0.0, 1e-3);
        } else {
          EXPECT_NEAR(r.recovered_params.at("lambda"), lambda, 1e-3 * std::abs(lambda));
        }
      }
    }
  }
}

TEST(GpdSlope, LomaxExample) {
  const auto r = gpd_slope_test(residual_curve(gpd(1, 1), 1, 0.0, 2.0), 1);
  EXPECT_NEAR(r.c_hat, -1.0 / 6, 1e-8);
  EXPECT_NEAR(r.recovered_params.at("c1"), 0.5, 1e-7);
  EXPECT_NEAR(r.recovered_params.at("lambda"), 1.0, 1e-6);
  EXPECT_NEAR(r.recovered_params.at("theta"), 1.0, 1e-6);
}

TEST(GpdSlope, MixtureIsNotLinear) {
  const auto grid = open_grid(0.0, 1.0, 60);
  const Curve c = curve(mixture_fig21(), MeasureKind::dcrex_min(1, 0), grid,
                        Abscissa::LogSurvival);
  EXPECT_EQ(gpd_slope_test(c, 1).model, Model::NotConstant);
}

TEST(GpdSlope, TooFewPoints) {
  Curve c;
  c.points = {{0.0, -0.25}};
  EXPECT_EQ(code_of([&] { gpd_slope_test(c, 1); }), ErrorCode::InvalidGrid);
}

TEST(PowerRatio, RecoversShape) {
  for (double c : {0.5, 1.0, 2.0, 5.0}) {
    for (int n : {1, 2, 3}) {
      const auto grid = open_grid(0.0, 2.0, 25);
      const auto r = power_ratio_test(power(2, c), n, grid);
      EXPECT_NE(r.model, Model::NotConstant) << c << " " << n;
      EXPECT_NEAR(r.recovered_params.at("c"), c, 1e-6) << c << " " << n;
      EXPECT_NEAR(r.recovered_params.at("b"), 2.0, 1e-6);
    }
  }
}

TEST(PowerRatio, UniformAndPower2) {
  const auto grid = open_grid(0.0, 1.0, 25);
  const auto u = power_ratio_test(uniform(0, 1), 1, grid);
  EXPECT_NEAR(u.recovered_params.at("k"), -1.0 / 3, 1e-9);
  EXPECT_NEAR(u.recovered_params.at("c"), 1.0, 1e-8);
  const auto p = power_ratio_test(power(1, 2), 1, grid);
  EXPECT_NEAR(p.recovered_params.at("k"), -0.3, 1e-9);
  EXPECT_NEAR(p.recovered_params.at("c"), 2.0, 1e-8);
}

TEST(PowerRatio, Example32IsNotConstant) {
  const auto grid = open_grid(1.0, 2.0, 25);
  EXPECT_EQ(power_ratio_test(example32(), 1, grid).model, Model::NotConstant);
  EXPECT_EQ(code_of([&] { power_ratio_test(exponential(1), 1, grid); }),
            ErrorCode::UnboundedSupport);
}

TEST(FamilyEquality, Examples) {
  const CheckSchedule s;
  EXPECT_EQ(family_equality_check(uniform(0, 1), uniform(2, 3), s,
                                  EqualityMode::Location).verdict,
            Verdict::Holds);
  EXPECT_EQ(family_equality_check(exponential(1), exponential(3), s,
                                  EqualityMode::Scale).verdict,
            Verdict::Holds);
  EXPECT_EQ(family_equality_check(uniform(0, 1), uniform(5, 9), s,
                                  EqualityMode::LocationScale).verdict,
            Verdict::Holds);
  EXPECT_EQ(family_equality_check(uniform(0, 1), exponential(1), s,
                                  EqualityMode::Location).verdict,
            Verdict::Fails);
  EXPECT_EQ(family_equality_check(weibull(1, 2), weibull(1, 3), s,
                                  EqualityMode::Scale).verdict,
            Verdict::Fails);
}

TEST(FamilyEquality, ShiftedCopiesAgree) {
  for (const DistributionModel& d :
       {uniform(0, 1), weibull(1, 2), gpd(1, 0.5), power(1, 3), mixture_fig21()}) {
    EXPECT_EQ(family_equality_check(d, affine_transform(d, 1, 2.5), CheckSchedule(),
                                    EqualityMode::Location).verdict,
              Verdict::Holds)
        << d.name();
  }
}

TEST(FamilyEquality, Errors) {
  EXPECT_EQ(code_of([] { CheckSchedule(std::vector<int>{}); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { CheckSchedule({1, 0}); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] {
              family_equality_check(uniform(1, 2), exponential(1), CheckSchedule(),
                                    EqualityMode::Scale);
            }),
            ErrorCode::SupportMismatch);
  EXPECT_EQ(code_of([] {
              family_equality_check(exponential(1), exponential(2), CheckSchedule(),
                                    EqualityMode::LocationScale);
            }),
            ErrorCode::UnboundedSupport);
}

TEST(Characterize, ConstancyTolerance) {
  EXPECT_EQ(constancy_tolerance(0.0), 1e-6);
  EXPECT_NEAR(constancy_tolerance(-0.25), 2.5e-5, 1e-18);
  EXPECT_EQ(constancy_tolerance(1e-3), 1e-6);
  EXPECT_NEAR(constancy_tolerance(3.0), 3e-4, 1e-18);
  EXPECT_EQ(CheckSchedule().orders.size(), 12u);
}
