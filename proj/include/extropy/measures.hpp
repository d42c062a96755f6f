#ifndef EXTROPY_MEASURES_HPP_
#define EXTROPY_MEASURES_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extropy/distributions.hpp"
#include "extropy/value.hpp"

namespace extropy {

enum class MeasureType {
  Extropy,   // -1/2 int f^2
  CREn,      // -int sf ln sf
  CPEn,      // -int F ln F
  CREx,      // -1/2 int sf^2
  CPEx,      // -1/2 int F^2
  CRExMin,   // CREx of X_{1:n}
  CPExMax,   // CPEx of X_{n:n}
  DCREx,     // residual life at age t
  DCRExMin,  // residual life of X_{1:n} at age t
  DCPEx,     // inactivity time at t
  DCPExMax,  // inactivity time of X_{n:n} at t
};

struct MeasureKind {
  MeasureType type = MeasureType::CREx;
  int n = 1;
  double t = 0.0;

  static MeasureKind extropy() { return {MeasureType::Extropy}; }
  static MeasureKind cren() { return {MeasureType::CREn}; }
  static MeasureKind cpen() { return {MeasureType::CPEn}; }
  static MeasureKind crex() { return {MeasureType::CREx}; }
  static MeasureKind cpex() { return {MeasureType::CPEx}; }
  static MeasureKind crex_min(int n) { return {MeasureType::CRExMin, n}; }
  static MeasureKind cpex_max(int n) { return {MeasureType::CPExMax, n}; }
  static MeasureKind dcrex(double t) { return {MeasureType::DCREx, 1, t}; }
  static MeasureKind dcrex_min(int n, double t) {
    return {MeasureType::DCRExMin, n, t};
  }
  static MeasureKind dcpex(double t) { return {MeasureType::DCPEx, 1, t}; }
  static MeasureKind dcpex_max(int n, double t) {
    return {MeasureType::DCPExMax, n, t};
  }

  bool dynamic() const noexcept;
  bool residual() const noexcept;  // integrates the survival side
  MeasureKind at(double age) const;  // copy with t replaced

  // CLI spelling, e.g. "dcrex-min".
  std::string label() const;
  static std::optional<MeasureType> parse_type(const std::string& label);
};

struct EvalOptions {
  // Use the analytic catalog when the (family, measure) pair has an entry.
  bool allow_closed_form = true;
};

// Evaluates the defining integral of `kind` for `d`.
//
// Residual measures integrate over [max(t, lower), upper); past measures over
// [lower, t] (t = upper for the static ones, which then require a bounded
// support).  Errors: UnboundedSupport, DivergentIntegral, DegenerateTail,
// DegenerateHead, OutsideSupport, InvalidOrder.
MeasureValue evaluate(const DistributionModel& d, const MeasureKind& kind,
                      const EvalOptions& options = {});

// Analytic catalog lookup; nullopt when the pair has no entry.
std::optional<double> closed_form(const DistributionModel& d,
                                  const MeasureKind& kind);

// E(X_{1:n}) = int sf^n over [0, inf).
MeasureValue expected_min(const DistributionModel& d, int n);

// -1/2 int (sf / E X)^2: extropy of the equilibrium distribution.
MeasureValue equilibrium_extropy(const DistributionModel& d);

// CREx of X_{1:n} through the change of variable u = sf(x):
// -1/2 int_0^1 u^{2n} / f(F^{-1}(1-u)) du.
MeasureValue crex_min_quantile_form(const DistributionModel& d, int n);

// Both sides of d/dt DCRExMin(n,t) = 2 n hazard(t) DCRExMin(n,t) + 1/2.
struct DerivativeCheck {
  double lhs = 0.0;  // central difference of the measure
  double rhs = 0.0;  // right-hand side of the identity
};
DerivativeCheck dcrex_min_derivative(const DistributionModel& d, int n,
                                     double t);

enum class Abscissa {
  Age,        // grid values are ages t
  LogSurvival // grid values are u in (0,1) with t = -ln u
};

struct CurvePoint {
  double t = 0.0;
  double value = 0.0;
};

struct Curve {
  std::vector<CurvePoint> points;
  // Grid abscissae that were degenerate or failed to evaluate.
  std::vector<double> rejected;
};

// Evaluates a dynamic measure along a strictly increasing grid.  Points whose
// sf (residual kinds) or cdf (past kinds) is below 1e-13 are rejected.
// With `threads` > 1 the points are evaluated concurrently.
Curve curve(const DistributionModel& d, const MeasureKind& kind,
            std::span<const double> grid, Abscissa abscissa = Abscissa::Age,
            unsigned threads = 1);

// Number of sign changes in the first differences of the curve values,
// ignoring differences below `flat` in magnitude.
int slope_sign_changes(const Curve& c, double flat = 0.0);

// n equally spaced points on the open interval (a, b).
std::vector<double> open_grid(double a, double b, int n);
// n equally spaced points on [a, b].
std::vector<double> closed_grid(double a, double b, int n);

}  // namespace extropy

#endif  // EXTROPY_MEASURES_HPP_
