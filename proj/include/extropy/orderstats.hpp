#ifndef EXTROPY_ORDERSTATS_HPP_
#define EXTROPY_ORDERSTATS_HPP_

#include <string>

#include "extropy/distributions.hpp"

namespace extropy {

// Rank k of an iid sample of size n.  n is capped at 60: the k-th order
// statistic is evaluated by direct binomial sums.
struct OrderSpec {
  int k = 1;
  int n = 1;

  // Throws InvalidOrder unless 1 <= k <= n <= 60.
  void validate() const;

  // Parses "k:n".
  static OrderSpec parse(const std::string& text);
};

// X_{1:n}: sf is sf(d)^n.
DistributionModel min_order(const DistributionModel& d, int n);

// X_{n:n}: cdf is cdf(d)^n.
DistributionModel max_order(const DistributionModel& d, int n);

// X_{k:n} as a distribution.  k == 1 and k == n return the min/max models.
DistributionModel kth_order(const DistributionModel& d, const OrderSpec& spec);

// P(X_{k:n} > x) = sum_{i<k} C(n,i) F(x)^i sf(x)^(n-i).
double kth_order_sf(const DistributionModel& d, const OrderSpec& spec, double x);

}  // namespace extropy

#endif  // EXTROPY_ORDERSTATS_HPP_
