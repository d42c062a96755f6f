#ifndef EXTROPY_ANALYSIS_HPP_
#define EXTROPY_ANALYSIS_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extropy/distributions.hpp"

namespace extropy {

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

// Outcome of one inequality check over a set of points.  A point's margin is
// (lhs - rhs) of the asserted lhs >= rhs, credited with the quadrature error
// estimates of both sides; equalities use -|lhs - rhs| instead.
struct CheckReport {
  std::string check_id;
  Verdict verdict = Verdict::Holds;
  double worst_margin = kInfinity;
  double worst_point = 0.0;
  std::optional<double> worst_point2;
  int points_tested = 0;
  int degenerate = 0;
  double tolerance = 1e-7;
  std::string note;
};

struct CheckOptions {
  double tolerance = 1e-7;
};

enum class Relation { DCRExLeq, DCPExGeq, HazardRateLeq, ReversedHazardGeq };
std::string to_string(Relation r);

struct OrderVerdict {
  Relation relation = Relation::DCRExLeq;
  bool holds_on_grid = true;
  std::optional<double> counterexample_t;
  double worst_margin = kInfinity;
  int points_tested = 0;
};

// 40 points from quantile(0.01) to quantile(0.99).
std::vector<double> default_grid(const DistributionModel& d, int points = 40);

// d1 <=_DCREx d2: DCREx(d1;t) >= DCREx(d2;t) on the grid.
OrderVerdict check_dcrex_order(const DistributionModel& d1,
                               const DistributionModel& d2,
                               std::span<const double> grid,
                               const CheckOptions& opts = {});
// d1 >=_DCPEx d2: DCPEx(d1;t) >= DCPEx(d2;t) on the grid.
OrderVerdict check_dcpex_order(const DistributionModel& d1,
                               const DistributionModel& d2,
                               std::span<const double> grid,
                               const CheckOptions& opts = {});
// d1 <=_hr d2: hazard(d1) >= hazard(d2).
OrderVerdict check_hr_order(const DistributionModel& d1,
                            const DistributionModel& d2,
                            std::span<const double> grid,
                            const CheckOptions& opts = {});
// d1 >=_rh d2: reversed hazard(d1) >= reversed hazard(d2).
OrderVerdict check_rh_order(const DistributionModel& d1,
                            const DistributionModel& d2,
                            std::span<const double> grid,
                            const CheckOptions& opts = {});

// Hazard premise on the grid and beyond it into the upper tail, then
// DCRExMin(d1;n,t) >= DCRExMin(d2;n,t).  Inconclusive when the premise fails.
CheckReport check_hr_implies_dcrex(const DistributionModel& d1,
                                   const DistributionModel& d2, int n,
                                   std::span<const double> grid,
                                   const CheckOptions& opts = {});
// Reversed hazard premise on [lower, grid end], then
// DCPExMax(d1;n,t) >= DCPExMax(d2;n,t).
CheckReport check_rh_implies_dcpex(const DistributionModel& d1,
                                   const DistributionModel& d2, int n,
                                   std::span<const double> grid,
                                   const CheckOptions& opts = {});

enum class ChainSide { Residual, Past };

// Residual: DCREx(X_{k:n}) >= DCREx of X_{k+1:n}, X_{k:n-1}, X_{k+1:n+1}.
// Past: DCPEx(X_{k:n}) >= DCPEx of X_{k-1:n}, X_{k:n+1}, X_{k-1:n-1}.
// Comparisons whose partner rank is invalid are skipped.
CheckReport check_korder_chains(const DistributionModel& d, int k, int n,
                                std::span<const double> grid, ChainSide side,
                                const CheckOptions& opts = {});

// CPEx(X + Y) >= max(CPEx(X), CPEx(Y)) with the cdf of the sum built by
// trapezoid convolution on 2^12 cells.
CheckReport check_convolution_inequality(const DistributionModel& d1,
                                         const DistributionModel& d2,
                                         const CheckOptions& opts = {});

// E|X - Y| = 2 int F(1-F) >= 4 CPEx and CPEx >= (E X - b) / 2.
CheckReport check_mean_abs_diff(const DistributionModel& d,
                                const CheckOptions& opts = {});

// CPEx(mixture) >= sum w_i CPEx(component i), each component measured on
// the mixture's support.
CheckReport check_conditioning(
    const std::vector<std::pair<double, DistributionModel>>& components,
    const CheckOptions& opts = {});

// CPEx(scale X + shift) == scale CPEx(X).
CheckReport check_shift_independence(const DistributionModel& d, double scale,
                                     double shift, const CheckOptions& opts = {});

// DCPEx(scale X + shift; t) == scale DCPEx(X; (t - shift) / scale).
CheckReport check_dcpex_shift(const DistributionModel& d, double scale,
                              double shift, std::span<const double> grid,
                              const CheckOptions& opts = {});

// For d symmetric about the midpoint c of its support,
// DCPEx(t) == DCREx(2c - t).
CheckReport check_symmetry_duality(const DistributionModel& d,
                                   std::span<const double> grid,
                                   const CheckOptions& opts = {});

// Bound checks on a single distribution.  Past-side checks need no bounded
// support; the static past checks are skipped when it is unbounded.
CheckReport check_crex_min_monotone(const DistributionModel& d, int n_max,
                                    const CheckOptions& opts = {});
CheckReport check_crex_min_mean_bound(const DistributionModel& d, int n_max,
                                      const CheckOptions& opts = {});
CheckReport check_crex_min_dominates(const DistributionModel& d, int n_max,
                                     const CheckOptions& opts = {});
CheckReport check_dcrex_min_mrl_bound(const DistributionModel& d, int n_max,
                                      std::span<const double> grid,
                                      const CheckOptions& opts = {});
CheckReport check_dcrex_min_monotone(const DistributionModel& d, int n_max,
                                     std::span<const double> grid,
                                     const CheckOptions& opts = {});
CheckReport check_dcpex_max_monotone_n(const DistributionModel& d, int n_max,
                                       std::span<const double> grid,
                                       const CheckOptions& opts = {});
CheckReport check_dcpex_max_monotone_t(const DistributionModel& d, int n_max,
                                       std::span<const double> grid,
                                       const CheckOptions& opts = {});
CheckReport check_dcpex_max_eit_bound(const DistributionModel& d, int n_max,
                                      std::span<const double> grid,
                                      const CheckOptions& opts = {});
CheckReport check_cpex_max_range_bound(const DistributionModel& d, int n_max,
                                       const CheckOptions& opts = {});
CheckReport check_cpex_cpen(const DistributionModel& d,
                            const CheckOptions& opts = {});

// Named distributions used by the bound suites and the acceptance run.
std::vector<std::pair<std::string, DistributionModel>> bundled_families();

enum class Suite { Bounds, Orderings, Inequalities, All };
std::optional<Suite> parse_suite(const std::string& name);

struct SuiteRequest {
  Suite suite = Suite::All;
  std::optional<DistributionModel> second;
  std::optional<int> n;  // all of 1..5 when absent
  CheckOptions options;
};

std::vector<CheckReport> run_suite(const DistributionModel& d,
                                   const SuiteRequest& request);

}  // namespace extropy

#endif  // EXTROPY_ANALYSIS_HPP_
