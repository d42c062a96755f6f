#include "integrals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "extropy/error.hpp"

namespace extropy::detail {
namespace {

// Integrand levels (h ~ r^p) used to seed the initial partition.
constexpr double kLevels[] = {0.9,  0.75, 0.5,  0.25, 0.1,  1e-2, 1e-3,
                              1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-16, 1e-20,
                              1e-24};

void finish_breakpoints(std::vector<double>& pts, double a, double b,
                        const std::vector<double>& kinks) {
  for (double k : kinks) {
    if (k > a && k < b) pts.push_back(k);
  }
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [&](double x) { return !(x > a && x < b); }),
            pts.end());
  pts.push_back(a);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

MeasureValue integrate_residual(const DistributionModel& d, double t,
                                double decay,
                                const std::function<double(double)>& h,
                                const QuadratureOptions& options) {
  const Support& s = d.support();
  const double sf_t = d.sf(t);
  if (!(sf_t > 0.0)) {
    throw Error(ErrorCode::DegenerateTail,
                d.name() + ": survival function vanishes at t");
  }
  double end = s.upper;
  double tail_error = 0.0;
  if (!s.bounded()) {
    const double alpha = d.tail_index();
    if (alpha * decay <= 1.0) {
      throw Error(ErrorCode::DivergentIntegral,
                  d.name() + ": tail too heavy for the requested integral");
    }
    end = d.upper_quantile(sf_t * kTruncationLevel);
    const double ratio = d.sf(end) / sf_t;
    double length = std::max(end - t, 1.0);
    if (std::isfinite(alpha)) {
      length = std::max(end, 1.0) / (alpha * decay - 1.0);
    } else if (d.sf(end) > 0.0) {
      const double hz = d.hazard_rate(end);
      if (hz > 0.0) length = 1.0 / (decay * hz);
    }
    tail_error = std::abs(h(ratio)) * length;
  }

  std::vector<double> pts;
  for (double level : kLevels) {
    const double q = sf_t * std::pow(level, 1.0 / decay);
    if (!(q > sf_t * kTruncationLevel) || q >= 1.0) continue;
    pts.push_back(d.upper_quantile(q));
  }
  finish_breakpoints(pts, t, end, d.kinks());

  auto integrand = [&](double x) { return h(d.sf(x) / sf_t); };
  const QuadratureResult q = integrate(integrand, pts, options);
  if (!std::isfinite(q.value)) {
    throw Error(ErrorCode::DivergentIntegral,
                d.name() + ": integral is not finite");
  }
  return {q.value, Method::Quadrature, q.abs_error + tail_error};
}

MeasureValue integrate_past(const DistributionModel& d, double t,
                            const std::function<double(double)>& h,
                            const QuadratureOptions& options) {
  const Support& s = d.support();
  const double cdf_t = d.cdf(t);
  if (!(cdf_t > 0.0)) {
    throw Error(ErrorCode::DegenerateHead,
                d.name() + ": distribution function vanishes at t");
  }
  const double end = std::min(t, s.upper);
  std::vector<double> pts;
  for (double level : kLevels) {
    const double p = cdf_t * level;
    if (!(p > 0.0) || p >= 1.0) continue;
    pts.push_back(d.quantile(p));
  }
  finish_breakpoints(pts, s.lower, end, d.kinks());

  auto integrand = [&](double x) { return h(d.cdf(x) / cdf_t); };
  const QuadratureResult q = integrate(integrand, pts, options);
  if (!std::isfinite(q.value)) {
    throw Error(ErrorCode::DivergentIntegral,
                d.name() + ": integral is not finite");
  }
  double value = q.value;
  if (t > s.upper) value += (t - s.upper) * h(1.0);
  return {value, Method::Quadrature, q.abs_error};
}

}  // namespace extropy::detail
