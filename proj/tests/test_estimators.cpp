#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include <gtest/gtest.h>

#include "extropy/distributions.hpp"
#include "extropy/error.hpp"
#include "extropy/estimators.hpp"

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

const SampleSet kSmall({3.0, 1.0, 2.0});

}  // namespace

TEST(Estimators, HandComputedStepIntegrals) {
  EXPECT_NEAR(empirical_crex(kSmall, 1), -7.0 / 9, 1e-15);
  EXPECT_NEAR(empirical_cpex(kSmall, 1), -5.0 / 18, 1e-15);
  EXPECT_NEAR(empirical_dcrex(kSmall, 0.0, 1), -7.0 / 9, 1e-15);
  EXPECT_NEAR(empirical_dcrex(kSmall, 1.5, 1), -0.375, 1e-15);
}

TEST(Estimators, HigherOrders) {
  // sf^4 steps: 1 on [0,1), (2/3)^4 on [1,2), (1/3)^4 on [2,3).
  const double expect = -0.5 * (1.0 + std::pow(2.0 / 3, 4) + std::pow(1.0 / 3, 4));
  EXPECT_NEAR(empirical_crex(kSmall, 2), expect, 1e-15);
  // F^4 steps: (1/3)^4 on [1,2), (2/3)^4 on [2,3).
  const double past = -0.5 * (std::pow(1.0 / 3, 4) + std::pow(2.0 / 3, 4));
  EXPECT_NEAR(empirical_cpex(kSmall, 2), past, 1e-15);
}

TEST(Estimators, SinglePoint) {
  EXPECT_NEAR(empirical_crex(SampleSet({2.5}), 1), -1.25, 1e-15);
  EXPECT_EQ(empirical_cpex(SampleSet({4.0}, 4.0), 1), 0.0);
  // With a bound beyond the sample the cdf is 1 on [max, bound).
  EXPECT_NEAR(empirical_cpex(SampleSet({1.0}, 3.0), 1), -1.0, 1e-15);
}

TEST(Estimators, ScaleEquivariance) {
  const auto raw = draw_samples(weibull(1, 2), 500, 9);
  std::vector<double> scaled(raw);
  for (double& v : scaled) v *= 3.5;
  for (int n : {1, 2, 4}) {
    EXPECT_NEAR(empirical_crex(SampleSet(scaled), n),
                3.5 * empirical_crex(SampleSet(raw), n), 1e-12);
    EXPECT_NEAR(empirical_cpex(SampleSet(scaled), n),
                3.5 * empirical_cpex(SampleSet(raw), n), 1e-12);
  }
}

TEST(Estimators, NondecreasingInOrderAndAboveHalfMean) {
  const SampleSet s(draw_samples(gpd(1, 0.5), 2000, 3));
  double prev = -kInfinity;
  for (int n = 1; n <= 10; ++n) {
    const double v = empirical_crex(s, n);
    EXPECT_GE(v, prev);
    EXPECT_GE(v, -s.mean() / 2 - 1e-12);
    EXPECT_LT(v, 0.0);
    prev = v;
  }
}

TEST(Estimators, Consistency) {
  const SampleSet e(draw_samples(exponential(1), 100000, 42));
  EXPECT_NEAR(empirical_crex(e, 1), -0.25, 0.01);
  EXPECT_NEAR(empirical_dcrex(e, 1.0, 1), -0.25, 0.015);
  const SampleSet u(draw_samples(uniform(0, 1), 100000, 42), 1.0);
  EXPECT_NEAR(empirical_cpex(u, 1), -1.0 / 6, 0.01);
}

TEST(Estimators, DrawsAreSeededAndInSupport) {
  const auto a = draw_samples(pareto(1, 3), 1000, 7);
  const auto b = draw_samples(pareto(1, 3), 1000, 7);
  const auto c = draw_samples(pareto(1, 3), 1000, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (double v : draw_samples(uniform(2, 5), 1000, 1)) {
    EXPECT_GE(v, 2.0);
    EXPECT_LE(v, 5.0);
  }
}

TEST(Estimators, Validation) {
  EXPECT_EQ(code_of([] { SampleSet({}); }), ErrorCode::EmptySample);
  EXPECT_EQ(code_of([] { SampleSet({1.0, -0.5}); }), ErrorCode::InvalidSample);
  EXPECT_EQ(code_of([] { SampleSet({1.0, NAN}); }), ErrorCode::InvalidSample);
  EXPECT_EQ(code_of([] { SampleSet({1.0, 5.0}, 3.0); }), ErrorCode::InvalidSample);
  EXPECT_EQ(code_of([] { empirical_dcrex(kSmall, -1.0, 1); }),
            ErrorCode::OutsideSupport);
  EXPECT_EQ(code_of([] { empirical_dcrex(kSmall, 3.0, 1); }),
            ErrorCode::DegenerateTail);
  EXPECT_EQ(code_of([] { empirical_crex(kSmall, 0); }), ErrorCode::InvalidOrder);
}

TEST(Estimators, ParsingSampleText) {
  const auto v = parse_samples("# header\n1.5\n\n  2\n3e-1 # trailing\n");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], 1.5);
  EXPECT_EQ(v[1], 2.0);
  EXPECT_EQ(v[2], 0.3);
  try {
    parse_samples("1\n2\nabc\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSample);
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Estimators, ReadingSampleFiles) {
  const std::string path = ::testing::TempDir() + "extropy_samples.txt";
  {
    std::ofstream f(path);
    f << "1\n2\n3\n";
  }
  EXPECT_EQ(read_samples(path), (std::vector<double>{1, 2, 3}));
  std::remove(path.c_str());
  EXPECT_EQ(code_of([&] { read_samples(path); }), ErrorCode::Io);
}
