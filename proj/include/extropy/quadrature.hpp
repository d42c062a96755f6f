#ifndef EXTROPY_QUADRATURE_HPP_
#define EXTROPY_QUADRATURE_HPP_

#include <functional>
#include <span>

namespace extropy {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_intervals = 1 << 14;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

// Globally adaptive 7/15-point Gauss-Kronrod integration.  The initial
// partition is given by `breakpoints` (sorted, at least two entries); the
// interval with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |value|) or max_intervals is reached.
QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

}  // namespace extropy

#endif  // EXTROPY_QUADRATURE_HPP_
