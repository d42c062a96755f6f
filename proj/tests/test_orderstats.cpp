#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "extropy/analysis.hpp"
#include "extropy/error.hpp"
#include "extropy/orderstats.hpp"

using namespace extropy;

namespace {

double binom(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

// P(X_{k:n} > x): fewer than k of the n draws fall at or below x.
double kth_sf_oracle(double F, int k, int n) {
  double s = 0.0;
  for (int j = 0; j < k; ++j) {
    s += binom(n, j) * std::pow(F, j) * std::pow(1.0 - F, n - j);
  }
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no extropy::Error thrown";
  return ErrorCode::Schema;
}

}  // namespace

TEST(OrderStats, MinOfExponentialIsExponential) {
  const DistributionModel m = min_order(exponential(1.5), 4);
  for (double x : {0.01, 0.2, 1.0, 3.0}) {
    EXPECT_NEAR(m.sf(x), std::exp(-6.0 * x), 1e-15);
    EXPECT_NEAR(m.pdf(x), 6.0 * std::exp(-6.0 * x), 1e-13);
  }
  EXPECT_NEAR(m.mean().value, 1.0 / 6.0, 1e-10);
}

TEST(OrderStats, MaxOfUniform) {
  const DistributionModel m = max_order(uniform(0, 1), 3);
  EXPECT_NEAR(m.cdf(0.5), 0.125, 1e-15);
  EXPECT_NEAR(m.pdf(0.5), 0.75, 1e-13);
  EXPECT_NEAR(m.mean().value, 0.75, 1e-10);
  EXPECT_NEAR(m.quantile(0.125), 0.5, 1e-12);
}

TEST(OrderStats, OrderOneIsTheParent) {
  const DistributionModel w = weibull(1, 2);
  const DistributionModel lo = min_order(w, 1), hi = max_order(w, 1);
  for (double x : {0.1, 0.8, 1.7}) {
    EXPECT_NEAR(lo.cdf(x), w.cdf(x), 1e-15);
    EXPECT_NEAR(hi.cdf(x), w.cdf(x), 1e-15);
  }
}

TEST(OrderStats, KthOrderMatchesBinomialSum) {
  for (const auto& [name, d] : bundled_families()) {
    for (int n : {1, 2, 5, 9}) {
      for (int k = 1; k <= n; ++k) {
        const DistributionModel o = kth_order(d, {k, n});
        for (double p : {0.05, 0.3, 0.5, 0.8, 0.97}) {
          const double x = d.quantile(p);
          const double expect = kth_sf_oracle(d.cdf(x), k, n);
          EXPECT_NEAR(o.sf(x), expect, 1e-12) << name << " " << k << ":" << n;
          EXPECT_NEAR(kth_order_sf(d, {k, n}, x), expect, 1e-12);
        }
      }
    }
  }
}

TEST(OrderStats, ExtremesAgreeWithKth) {
  const DistributionModel d = mixture_fig21();
  for (double x : {0.1, 0.9, 2.5}) {
    EXPECT_NEAR(kth_order(d, {1, 6}).sf(x), min_order(d, 6).sf(x), 1e-13);
    EXPECT_NEAR(kth_order(d, {6, 6}).cdf(x), max_order(d, 6).cdf(x), 1e-13);
  }
}

TEST(OrderStats, TinyTailProbabilitiesStayInvertible) {
  // With large n the survival of the minimum underflows near 1 - p; the
  // quantile must still land inside the parent's support.
  const DistributionModel m = min_order(pareto(1, 3), 12);
  const double x = m.quantile(1e-14);
  EXPECT_GT(x, 0.0);
  EXPECT_NEAR(m.cdf(x), 1e-14, 1e-20);
  const double y = m.upper_quantile(1e-12);
  EXPECT_NEAR(m.sf(y), 1e-12, 1e-18);
}

TEST(OrderStats, SpecParsing) {
  const OrderSpec s = OrderSpec::parse("3:7");
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.n, 7);
  EXPECT_EQ(code_of([] { OrderSpec::parse("0:3"); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { OrderSpec::parse("4:3"); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { OrderSpec::parse("3"); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { OrderSpec::parse("a:b"); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { min_order(uniform(0, 1), 0); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([] { max_order(uniform(0, 1), -2); }), ErrorCode::InvalidOrder);
}
