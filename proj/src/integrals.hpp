#ifndef EXTROPY_SRC_INTEGRALS_HPP_
#define EXTROPY_SRC_INTEGRALS_HPP_

#include <functional>

#include "extropy/distributions.hpp"
#include "extropy/quadrature.hpp"
#include "extropy/value.hpp"

namespace extropy::detail {

// sf levels at which infinite-support integrals are truncated.
inline constexpr double kTruncationLevel = 1e-12;

// Integral over [t, upper) of h(sf(x) / sf(t)).  `decay` is the power p with
// h(r) ~ r^p as r -> 0; it drives the breakpoint placement and the
// integrability test against the tail index.  Requires sf(t) > 0 and
// t >= support lower.
MeasureValue integrate_residual(const DistributionModel& d, double t,
                                double decay,
                                const std::function<double(double)>& h,
                                const QuadratureOptions& options = {});

// Integral over [lower, t] of h(cdf(x) / cdf(t)).  Requires cdf(t) > 0 and
// t finite.
MeasureValue integrate_past(const DistributionModel& d, double t,
                            const std::function<double(double)>& h,
                            const QuadratureOptions& options = {});

}  // namespace extropy::detail

#endif  // EXTROPY_SRC_INTEGRALS_HPP_
