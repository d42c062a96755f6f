#include "extropy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "extropy/error.hpp"
#include "extropy/measures.hpp"
#include "extropy/orderstats.hpp"
#include "integrals.hpp"

namespace extropy {
namespace {

constexpr double kEqualityTolerance = 1e-8;
constexpr int kConvolutionCells = 1 << 12;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool degenerate_code(ErrorCode c) {
  return c == ErrorCode::DegenerateTail || c == ErrorCode::DegenerateHead ||
         c == ErrorCode::OutsideSupport;
}

MeasureValue ev(const DistributionModel& d, const MeasureKind& k) {
  return evaluate(d, k);
}

// Accumulates per-point margins into a CheckReport.
class Tally {
 public:
  Tally(std::string id, double tolerance) {
    report_.check_id = std::move(id);
    report_.tolerance = tolerance;
  }

  void geq(double point, const MeasureValue& lhs, const MeasureValue& rhs,
           std::optional<double> point2 = std::nullopt,
           const std::string& label = {}) {
    record(point, point2,
           lhs.value - rhs.value + lhs.abs_error_estimate + rhs.abs_error_estimate,
           label);
  }

  void geq(double point, double lhs, double rhs, double err = 0.0,
           std::optional<double> point2 = std::nullopt,
           const std::string& label = {}) {
    record(point, point2, lhs - rhs + err, label);
  }

  void equal(double point, const MeasureValue& a, const MeasureValue& b,
             std::optional<double> point2 = std::nullopt) {
    record(point, point2,
           -std::abs(a.value - b.value) + a.abs_error_estimate +
               b.abs_error_estimate,
           {});
  }

  // Runs f, counting degenerate-point errors instead of propagating them.
  template <class F>
  void at(F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (!degenerate_code(e.code())) throw;
      ++report_.degenerate;
    }
  }

  void note(std::string text) { extra_ = std::move(text); }

  CheckReport finish() {
    CheckReport r = report_;
    const int total = r.points_tested + r.degenerate;
    if (r.worst_margin < -r.tolerance) {
      r.verdict = Verdict::Fails;
    } else if (total == 0 || r.degenerate * 10 > total) {
      r.verdict = Verdict::Inconclusive;
    } else {
      r.verdict = Verdict::Holds;
    }
    std::string note = extra_;
    if (!worst_label_.empty()) {
      note += (note.empty() ? "" : "; ") + std::string("worst at ") + worst_label_;
    }
    r.note = note;
    return r;
  }

 private:
  void record(double point, std::optional<double> point2, double margin,
              const std::string& label) {
    ++report_.points_tested;
    if (margin < report_.worst_margin || report_.points_tested == 1) {
      report_.worst_margin = margin;
      report_.worst_point = point;
      report_.worst_point2 = point2;
      worst_label_ = label;
    }
  }

  CheckReport report_;
  std::string extra_;
  std::string worst_label_;
};

CheckReport inconclusive(std::string id, double tolerance, std::string note) {
  CheckReport r;
  r.check_id = std::move(id);
  r.verdict = Verdict::Inconclusive;
  r.tolerance = tolerance;
  r.note = std::move(note);
  return r;
}

void require_bounded(const DistributionModel& d, const char* what) {
  if (!d.support().bounded()) {
    throw Error(ErrorCode::UnboundedSupport,
                std::string(what) + " needs bounded support: " + d.name());
  }
}

template <class Value>
OrderVerdict order_check(Relation relation, std::span<const double> grid,
                         const CheckOptions& opts, Value&& margin_at) {
  OrderVerdict v;
  v.relation = relation;
  for (double t : grid) {
    double m = 0.0;
    try {
      m = margin_at(t);
    } catch (const Error& e) {
      if (!degenerate_code(e.code())) throw;
      continue;
    }
    ++v.points_tested;
    if (m < v.worst_margin) v.worst_margin = m;
    if (m < -opts.tolerance && !v.counterexample_t) v.counterexample_t = t;
  }
  v.holds_on_grid = !v.counterexample_t.has_value();
  return v;
}

double relative_slack(double a, double b) {
  return 1e-12 * std::max({std::abs(a), std::abs(b), 1.0});
}

CheckReport from_order(std::string id, const OrderVerdict& v,
                       const CheckOptions& opts) {
  CheckReport r;
  r.check_id = std::move(id);
  r.tolerance = opts.tolerance;
  r.worst_margin = v.worst_margin;
  r.points_tested = v.points_tested;
  r.verdict = v.holds_on_grid ? (v.points_tested ? Verdict::Holds
                                                 : Verdict::Inconclusive)
                              : Verdict::Fails;
  if (v.counterexample_t) {
    r.worst_point = *v.counterexample_t;
    r.note = "first violation at t=" + fmt(*v.counterexample_t);
  }
  return r;
}

std::vector<double> merged(std::span<const double> a, std::vector<double> b) {
  b.insert(b.end(), a.begin(), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

std::string rank(int k, int n) {
  return "X_{" + std::to_string(k) + ":" + std::to_string(n) + "}";
}

// Values of the cdf of X + Y at L + j (U - L) / cells, j = 0..cells, by a
// trapezoid Stieltjes sum over the support of Y.
std::vector<double> convolution_cdf(const DistributionModel& x,
                                    const DistributionModel& y, int cells) {
  const Support sx = x.support();
  const Support sy = y.support();
  const double lo = sx.lower + sy.lower;
  const double hi = sx.upper + sy.upper;
  std::vector<double> ys(cells + 1), fy(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    ys[i] = sy.lower + (sy.upper - sy.lower) * i / cells;
    fy[i] = y.cdf(ys[i]);
  }
  std::vector<double> out(cells + 1);
  for (int j = 0; j <= cells; ++j) {
    const double s = lo + (hi - lo) * j / cells;
    double acc = 0.0;
    double left = x.cdf(s - ys[0]);
    for (int i = 0; i < cells; ++i) {
      const double right = x.cdf(s - ys[i + 1]);
      acc += 0.5 * (left + right) * (fy[i + 1] - fy[i]);
      left = right;
    }
    out[j] = std::clamp(acc, 0.0, 1.0);
  }
  out.front() = 0.0;
  out.back() = 1.0;
  return out;
}

// -1/2 int F^2 for F piecewise linear through the given node values.
double cpex_piecewise_linear(const std::vector<double>& f, double width) {
  const double h = width / static_cast<double>(f.size() - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double a = f[i], b = f[i + 1];
    acc += h * (a * a + a * b + b * b) / 3.0;
  }
  return -0.5 * acc;
}

bool is_symmetric(const DistributionModel& d) {
  const Support s = d.support();
  if (!s.bounded()) return false;
  const double c = 0.5 * (s.lower + s.upper);
  const double half = 0.5 * (s.upper - s.lower);
  for (int i = 1; i < 20; ++i) {
    const double x = half * i / 20.0;
    if (std::abs(d.cdf(c - x) - d.sf(c + x)) > 1e-12) return false;
  }
  return true;
}

std::vector<double> common_grid(const DistributionModel& a,
                                const DistributionModel& b, int points) {
  const double lo = std::max(a.quantile(0.01), b.quantile(0.01));
  const double hi = std::min(a.quantile(0.99), b.quantile(0.99));
  if (!(hi > lo)) return default_grid(a, points);
  return closed_grid(lo, hi, points);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::DCRExLeq: return "DCRExLeq";
    case Relation::DCPExGeq: return "DCPExGeq";
    case Relation::HazardRateLeq: return "HazardRateLeq";
    case Relation::ReversedHazardGeq: return "ReversedHazardGeq";
  }
  return "DCRExLeq";
}

std::vector<double> default_grid(const DistributionModel& d, int points) {
  return closed_grid(d.quantile(0.01), d.quantile(0.99), points);
}

// --- orderings --------------------------------------------------------------

OrderVerdict check_dcrex_order(const DistributionModel& d1,
                               const DistributionModel& d2,
                               std::span<const double> grid,
                               const CheckOptions& opts) {
  return order_check(Relation::DCRExLeq, grid, opts, [&](double t) {
    const MeasureValue a = ev(d1, MeasureKind::dcrex(t));
    const MeasureValue b = ev(d2, MeasureKind::dcrex(t));
    return a.value - b.value + a.abs_error_estimate + b.abs_error_estimate;
  });
}

OrderVerdict check_dcpex_order(const DistributionModel& d1,
                               const DistributionModel& d2,
                               std::span<const double> grid,
                               const CheckOptions& opts) {
  return order_check(Relation::DCPExGeq, grid, opts, [&](double t) {
    const MeasureValue a = ev(d1, MeasureKind::dcpex(t));
    const MeasureValue b = ev(d2, MeasureKind::dcpex(t));
    return a.value - b.value + a.abs_error_estimate + b.abs_error_estimate;
  });
}

OrderVerdict check_hr_order(const DistributionModel& d1,
                            const DistributionModel& d2,
                            std::span<const double> grid,
                            const CheckOptions& opts) {
  return order_check(Relation::HazardRateLeq, grid, opts, [&](double t) {
    const double a = d1.hazard_rate(t), b = d2.hazard_rate(t);
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw Error(ErrorCode::DegenerateTail, "hazard undefined");
    }
    return a - b + relative_slack(a, b);
  });
}

OrderVerdict check_rh_order(const DistributionModel& d1,
                            const DistributionModel& d2,
                            std::span<const double> grid,
                            const CheckOptions& opts) {
  return order_check(Relation::ReversedHazardGeq, grid, opts, [&](double t) {
    const double a = d1.reversed_hazard(t), b = d2.reversed_hazard(t);
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw Error(ErrorCode::DegenerateHead, "reversed hazard undefined");
    }
    return a - b + relative_slack(a, b);
  });
}

CheckReport check_hr_implies_dcrex(const DistributionModel& d1,
                                   const DistributionModel& d2, int n,
                                   std::span<const double> grid,
                                   const CheckOptions& opts) {
  const std::string id = "hr_implies_dcrex";
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  if (grid.empty()) throw Error(ErrorCode::InvalidGrid, "empty grid");
  // The residual measure at t sees the whole tail, so the premise is
  // checked past the last grid point as well.
  std::vector<double> tail;
  const double end = std::min(d1.upper_quantile(1e-8), d2.upper_quantile(1e-8));
  if (end > grid.back()) {
    for (int i = 1; i <= 20; ++i) {
      tail.push_back(grid.back() + (end - grid.back()) * i / 20.0);
    }
  }
  const std::vector<double> premise_grid = merged(grid, tail);
  const OrderVerdict premise = check_hr_order(d1, d2, premise_grid, opts);
  if (!premise.holds_on_grid) {
    return inconclusive(id, opts.tolerance,
                        "hazard premise fails at t=" +
                            fmt(*premise.counterexample_t));
  }
  Tally tally(id, opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      tally.geq(t, ev(d1, MeasureKind::dcrex_min(n, t)),
                ev(d2, MeasureKind::dcrex_min(n, t)));
    });
  }
  return tally.finish();
}

CheckReport check_rh_implies_dcpex(const DistributionModel& d1,
                                   const DistributionModel& d2, int n,
                                   std::span<const double> grid,
                                   const CheckOptions& opts) {
  const std::string id = "rh_implies_dcpex";
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  if (grid.empty()) throw Error(ErrorCode::InvalidGrid, "empty grid");
  std::vector<double> head;
  const double start = std::max(d1.quantile(1e-8), d2.quantile(1e-8));
  if (start < grid.front()) {
    for (int i = 0; i < 20; ++i) {
      head.push_back(start + (grid.front() - start) * i / 20.0);
    }
  }
  const std::vector<double> premise_grid = merged(grid, head);
  const OrderVerdict premise = check_rh_order(d1, d2, premise_grid, opts);
  if (!premise.holds_on_grid) {
    return inconclusive(id, opts.tolerance,
                        "reversed hazard premise fails at t=" +
                            fmt(*premise.counterexample_t));
  }
  Tally tally(id, opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      tally.geq(t, ev(d1, MeasureKind::dcpex_max(n, t)),
                ev(d2, MeasureKind::dcpex_max(n, t)));
    });
  }
  return tally.finish();
}

CheckReport check_korder_chains(const DistributionModel& d, int k, int n,
                                std::span<const double> grid, ChainSide side,
                                const CheckOptions& opts) {
  const OrderSpec base{k, n};
  base.validate();
  const bool residual = side == ChainSide::Residual;
  const std::vector<OrderSpec> candidates =
      residual ? std::vector<OrderSpec>{{k + 1, n}, {k, n - 1}, {k + 1, n + 1}}
               : std::vector<OrderSpec>{{k - 1, n}, {k, n + 1}, {k - 1, n - 1}};
  std::vector<std::pair<OrderSpec, DistributionModel>> partners;
  for (const OrderSpec& s : candidates) {
    if (s.k < 1 || s.n < s.k || s.n > 60) continue;
    partners.emplace_back(s, kth_order(d, s));
  }
  const DistributionModel x = kth_order(d, base);
  Tally tally(residual ? "korder_chain_residual" : "korder_chain_past",
              opts.tolerance);
  if (partners.empty()) tally.note("no valid partner ranks");
  auto kind = [&](double t) {
    return residual ? MeasureKind::dcrex(t) : MeasureKind::dcpex(t);
  };
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue lhs = ev(x, kind(t));
      for (const auto& [spec, model] : partners) {
        tally.at([&] {
          tally.geq(t, lhs, ev(model, kind(t)), std::nullopt,
                    rank(k, n) + " vs " + rank(spec.k, spec.n));
        });
      }
    });
  }
  return tally.finish();
}

// --- inequalities -----------------------------------------------------------

CheckReport check_convolution_inequality(const DistributionModel& d1,
                                         const DistributionModel& d2,
                                         const CheckOptions& opts) {
  require_bounded(d1, "convolution inequality");
  require_bounded(d2, "convolution inequality");
  const bool swap = (d2.support().upper - d2.support().lower) >
                    (d1.support().upper - d1.support().lower);
  const DistributionModel& x = swap ? d2 : d1;
  const DistributionModel& y = swap ? d1 : d2;  // narrower support
  const double lo = x.support().lower + y.support().lower;
  const double hi = x.support().upper + y.support().upper;

  const double fine =
      cpex_piecewise_linear(convolution_cdf(x, y, kConvolutionCells), hi - lo);
  const double coarse = cpex_piecewise_linear(
      convolution_cdf(x, y, kConvolutionCells / 2), hi - lo);
  const MeasureValue sum{fine, Method::Quadrature, std::abs(fine - coarse)};

  const MeasureValue a = ev(d1, MeasureKind::cpex());
  const MeasureValue b = ev(d2, MeasureKind::cpex());
  const MeasureValue& best = a.value >= b.value ? a : b;

  Tally tally("convolution_inequality", opts.tolerance);
  tally.geq(0.0, sum, best);

  // Same comparison with every measure taken over the common horizon
  // [min lower, upper of the sum].
  const double h0 = std::min({d1.support().lower, d2.support().lower, lo});
  const double ha = a.value - 0.5 * (hi - d1.support().upper);
  const double hb = b.value - 0.5 * (hi - d2.support().upper);
  const double common = fine - std::max(ha, hb);
  tally.note("sum cpex=" + fmt(fine) + " over [" + fmt(lo) + "," + fmt(hi) +
             "], max component cpex=" + fmt(best.value) +
             "; common-horizon margin over [" + fmt(h0) + "," + fmt(hi) +
             "]=" + fmt(common));
  return tally.finish();
}

CheckReport check_mean_abs_diff(const DistributionModel& d,
                                const CheckOptions& opts) {
  require_bounded(d, "mean absolute difference check");
  const double b = d.support().upper;
  const MeasureValue g = detail::integrate_past(
      d, b, [](double r) { return r * (1.0 - r); });
  const MeasureValue gmd{2.0 * g.value, Method::Quadrature,
                         2.0 * g.abs_error_estimate};
  const MeasureValue cpex = ev(d, MeasureKind::cpex());
  const MeasureValue mean = d.mean();
  Tally tally("mean_abs_diff", opts.tolerance);
  tally.geq(0.0, gmd.value, 4.0 * cpex.value,
            gmd.abs_error_estimate + 4.0 * cpex.abs_error_estimate,
            std::nullopt, "E|X-Y| >= 4 cpex");
  tally.geq(1.0, cpex.value, 0.5 * (mean.value - b),
            cpex.abs_error_estimate + 0.5 * mean.abs_error_estimate,
            std::nullopt, "cpex >= (mean - b)/2");
  tally.note("E|X-Y|=" + fmt(gmd.value) + ", cpex=" + fmt(cpex.value));
  return tally.finish();
}

CheckReport check_conditioning(
    const std::vector<std::pair<double, DistributionModel>>& components,
    const CheckOptions& opts) {
  if (components.empty()) throw Error(ErrorCode::BadWeights, "no components");
  double total = 0.0;
  for (const auto& [w, c] : components) {
    if (!(w > 0.0)) throw Error(ErrorCode::BadWeights, "weights must be positive");
    total += w;
    require_bounded(c, "conditioning check");
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadWeights, "weights must sum to 1");
  }
  const DistributionModel mix = mixture(components);
  const double upper = mix.support().upper;
  const MeasureValue lhs = ev(mix, MeasureKind::cpex());
  double rhs = 0.0, err = lhs.abs_error_estimate;
  for (const auto& [w, c] : components) {
    const MeasureValue v = ev(c, MeasureKind::cpex());
    // cdf is 1 between the component's and the mixture's upper bound.
    rhs += w * (v.value - 0.5 * (upper - c.support().upper));
    err += w * v.abs_error_estimate;
  }
  Tally tally("conditioning", opts.tolerance);
  tally.geq(0.0, lhs.value, rhs, err);
  tally.note("mixture cpex=" + fmt(lhs.value) + ", weighted components=" +
             fmt(rhs));
  return tally.finish();
}

CheckReport check_shift_independence(const DistributionModel& d, double scale,
                                     double shift, const CheckOptions& opts) {
  require_bounded(d, "shift independence");
  const DistributionModel y = affine_transform(d, scale, shift);
  const MeasureValue a = ev(y, MeasureKind::cpex());
  const MeasureValue b = ev(d, MeasureKind::cpex());
  Tally tally("shift_independence",
              std::min(opts.tolerance, kEqualityTolerance));
  tally.equal(0.0, a,
              {scale * b.value, b.method, scale * b.abs_error_estimate});
  return tally.finish();
}

CheckReport check_dcpex_shift(const DistributionModel& d, double scale,
                              double shift, std::span<const double> grid,
                              const CheckOptions& opts) {
  const DistributionModel y = affine_transform(d, scale, shift);
  Tally tally("dcpex_shift_relation",
              std::min(opts.tolerance, kEqualityTolerance));
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue a = ev(y, MeasureKind::dcpex(scale * t + shift));
      const MeasureValue b = ev(d, MeasureKind::dcpex(t));
      tally.equal(t, a,
                  {scale * b.value, b.method, scale * b.abs_error_estimate});
    });
  }
  return tally.finish();
}

CheckReport check_symmetry_duality(const DistributionModel& d,
                                   std::span<const double> grid,
                                   const CheckOptions& opts) {
  const double tol = std::min(opts.tolerance, kEqualityTolerance);
  if (!is_symmetric(d)) {
    return inconclusive("symmetry_duality", tol,
                        d.name() + " is not symmetric about its midpoint");
  }
  const double mirror = d.support().lower + d.support().upper;
  Tally tally("symmetry_duality", tol);
  for (double t : grid) {
    tally.at([&] {
      tally.equal(t, ev(d, MeasureKind::dcpex(t)),
                  ev(d, MeasureKind::dcrex(mirror - t)));
    });
  }
  return tally.finish();
}

// --- bounds -----------------------------------------------------------------

CheckReport check_crex_min_monotone(const DistributionModel& d, int n_max,
                                    const CheckOptions& opts) {
  Tally tally("crex_min_increasing_in_n", opts.tolerance);
  MeasureValue prev = ev(d, MeasureKind::crex_min(1));
  for (int n = 2; n <= n_max; ++n) {
    const MeasureValue cur = ev(d, MeasureKind::crex_min(n));
    tally.geq(n, cur, prev);
    prev = cur;
  }
  return tally.finish();
}

CheckReport check_crex_min_mean_bound(const DistributionModel& d, int n_max,
                                      const CheckOptions& opts) {
  const MeasureValue mean = d.mean();
  const MeasureValue bound{-0.5 * mean.value, mean.method,
                           0.5 * mean.abs_error_estimate};
  Tally tally("crex_min_mean_bound", opts.tolerance);
  for (int n = 1; n <= n_max; ++n) {
    tally.geq(n, ev(d, MeasureKind::crex_min(n)), bound);
  }
  return tally.finish();
}

CheckReport check_crex_min_dominates(const DistributionModel& d, int n_max,
                                     const CheckOptions& opts) {
  const MeasureValue base = ev(d, MeasureKind::crex());
  Tally tally("crex_min_dominates_crex", opts.tolerance);
  for (int n = 1; n <= n_max; ++n) {
    tally.geq(n, ev(d, MeasureKind::crex_min(n)), base);
  }
  return tally.finish();
}

CheckReport check_dcrex_min_mrl_bound(const DistributionModel& d, int n_max,
                                      std::span<const double> grid,
                                      const CheckOptions& opts) {
  Tally tally("dcrex_min_mrl_bound", opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue mrl = d.mean_residual_life(t);
      const MeasureValue bound{-0.5 * mrl.value, mrl.method,
                               0.5 * mrl.abs_error_estimate};
      for (int n = 1; n <= n_max; ++n) {
        tally.geq(t, ev(d, MeasureKind::dcrex_min(n, t)), bound, n);
      }
    });
  }
  return tally.finish();
}

CheckReport check_dcrex_min_monotone(const DistributionModel& d, int n_max,
                                     std::span<const double> grid,
                                     const CheckOptions& opts) {
  Tally tally("dcrex_min_increasing_in_n", opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue base = ev(d, MeasureKind::dcrex(t));
      MeasureValue prev = base;
      for (int n = 2; n <= n_max; ++n) {
        const MeasureValue cur = ev(d, MeasureKind::dcrex_min(n, t));
        tally.geq(t, cur, prev, n);
        tally.geq(t, cur, base, n);
        prev = cur;
      }
    });
  }
  return tally.finish();
}

CheckReport check_dcpex_max_monotone_n(const DistributionModel& d, int n_max,
                                       std::span<const double> grid,
                                       const CheckOptions& opts) {
  Tally tally("dcpex_max_increasing_in_n", opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue base = ev(d, MeasureKind::dcpex(t));
      MeasureValue prev = base;
      for (int n = 2; n <= n_max; ++n) {
        const MeasureValue cur = ev(d, MeasureKind::dcpex_max(n, t));
        tally.geq(t, cur, prev, n);
        tally.geq(t, cur, base, n);
        prev = cur;
      }
    });
  }
  return tally.finish();
}

CheckReport check_dcpex_max_monotone_t(const DistributionModel& d, int n_max,
                                       std::span<const double> grid,
                                       const CheckOptions& opts) {
  Tally tally("dcpex_max_decreasing_in_t", opts.tolerance);
  for (int n = 1; n <= n_max; ++n) {
    std::optional<std::pair<double, MeasureValue>> prev;
    for (double t : grid) {
      tally.at([&] {
        const MeasureValue cur = ev(d, MeasureKind::dcpex_max(n, t));
        if (prev) {
          tally.geq(prev->first, prev->second, cur, t,
                    "n=" + std::to_string(n));
        }
        prev.emplace(t, cur);
      });
    }
  }
  return tally.finish();
}

CheckReport check_dcpex_max_eit_bound(const DistributionModel& d, int n_max,
                                      std::span<const double> grid,
                                      const CheckOptions& opts) {
  Tally tally("dcpex_max_eit_bound", opts.tolerance);
  for (double t : grid) {
    tally.at([&] {
      const MeasureValue eit = d.expected_inactivity_time(t);
      const MeasureValue bound{-0.5 * eit.value, eit.method,
                               0.5 * eit.abs_error_estimate};
      for (int n = 1; n <= n_max; ++n) {
        tally.geq(t, ev(d, MeasureKind::dcpex_max(n, t)), bound, n);
      }
    });
  }
  return tally.finish();
}

CheckReport check_cpex_max_range_bound(const DistributionModel& d, int n_max,
                                       const CheckOptions& opts) {
  require_bounded(d, "range bound");
  const MeasureValue mean = d.mean();
  const double b = d.support().upper;
  Tally tally("cpex_max_range_bound", opts.tolerance);
  for (int n = 1; n <= n_max; ++n) {
    const MeasureValue v = ev(d, MeasureKind::cpex_max(n));
    tally.geq(n, v.value, -0.5 * (b - mean.value),
              v.abs_error_estimate + 0.5 * mean.abs_error_estimate);
  }
  return tally.finish();
}

CheckReport check_cpex_cpen(const DistributionModel& d,
                            const CheckOptions& opts) {
  require_bounded(d, "cpex-cpen inequality");
  const MeasureValue cpex = ev(d, MeasureKind::cpex());
  const MeasureValue cpen = ev(d, MeasureKind::cpen());
  const MeasureValue mean = d.mean();
  const double b = d.support().upper;
  Tally tally("cpex_cpen_inequality", opts.tolerance);
  tally.geq(0.0, 0.5 * (cpen.value - (b - mean.value)), cpex.value,
            0.5 * (cpen.abs_error_estimate + mean.abs_error_estimate) +
                cpex.abs_error_estimate);
  return tally.finish();
}

// --- suites -----------------------------------------------------------------

std::vector<std::pair<std::string, DistributionModel>> bundled_families() {
  return {
      {"uniform(0,1)", uniform(0, 1)},
      {"uniform(2,5)", uniform(2, 5)},
      {"finite_range(1,2)", finite_range(1, 2)},
      {"weibull(1,2)", weibull(1, 2)},
      {"weibull(2,0.8)", weibull(2, 0.8)},
      {"folded_cramer(1)", folded_cramer(1)},
      {"pareto(1,3)", pareto(1, 3)},
      {"gpd(1,1)", gpd(1, 1)},
      {"gpd(1,-0.5)", gpd(1, -0.5)},
      {"power(1,2)", power(1, 2)},
      {"power(3,0.5)", power(3, 0.5)},
      {"exponential(1)", exponential(1)},
      {"mixture_fig21", mixture_fig21()},
      {"example32", example32()},
  };
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "bounds") return Suite::Bounds;
  if (name == "orderings") return Suite::Orderings;
  if (name == "inequalities") return Suite::Inequalities;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<CheckReport> run_suite(const DistributionModel& d,
                                   const SuiteRequest& req) {
  const CheckOptions& o = req.options;
  const int n_static = req.n.value_or(10);
  const int n_dynamic = req.n.value_or(5);
  const bool bounded = d.support().bounded();
  const bool all = req.suite == Suite::All;
  std::vector<CheckReport> out;

  if (all || req.suite == Suite::Bounds) {
    const std::vector<double> grid = default_grid(d);
    const std::vector<double> grid20 = default_grid(d, 20);
    // Mean and mrl bounds need a finite mean.
    const bool finite_mean = bounded || d.tail_index() > 1.0;
    out.push_back(check_crex_min_monotone(d, n_static, o));
    if (finite_mean) out.push_back(check_crex_min_mean_bound(d, n_static, o));
    out.push_back(check_crex_min_dominates(d, n_static, o));
    if (finite_mean) {
      out.push_back(check_dcrex_min_mrl_bound(d, n_dynamic, grid20, o));
    }
    out.push_back(check_dcrex_min_monotone(d, n_dynamic, grid20, o));
    out.push_back(check_dcpex_max_monotone_n(d, n_dynamic, grid, o));
    out.push_back(check_dcpex_max_monotone_t(d, n_dynamic, grid, o));
    out.push_back(check_dcpex_max_eit_bound(d, n_dynamic, grid, o));
    if (bounded) {
      out.push_back(check_cpex_max_range_bound(d, n_static, o));
      out.push_back(check_cpex_cpen(d, o));
    }
  }

  if (all || req.suite == Suite::Orderings) {
    const DistributionModel& other = req.second ? *req.second : d;
    const std::vector<double> grid = common_grid(d, other, 40);
    const std::vector<int> ns =
        req.n ? std::vector<int>{*req.n} : std::vector<int>{1, 2, 3, 4, 5};
    out.push_back(from_order("dcrex_order",
                             check_dcrex_order(d, other, grid, o), o));
    out.push_back(from_order("dcpex_order",
                             check_dcpex_order(d, other, grid, o), o));
    for (int n : ns) {
      CheckReport hr = check_hr_implies_dcrex(d, other, n, grid, o);
      hr.check_id += "_n" + std::to_string(n);
      out.push_back(hr);
      CheckReport rh = check_rh_implies_dcpex(d, other, n, grid, o);
      rh.check_id += "_n" + std::to_string(n);
      out.push_back(rh);
    }
    const std::vector<double> own = default_grid(d, 20);
    for (int n : ns) {
      for (int k = 1; k <= n; ++k) {
        for (ChainSide side : {ChainSide::Residual, ChainSide::Past}) {
          CheckReport r = check_korder_chains(d, k, n, own, side, o);
          r.check_id += "_k" + std::to_string(k) + "_n" + std::to_string(n);
          out.push_back(r);
        }
      }
    }
  }

  if (all || req.suite == Suite::Inequalities) {
    const std::vector<double> grid = default_grid(d);
    out.push_back(check_dcpex_shift(d, 2.0, 3.0, grid, o));
    if (bounded) {
      out.push_back(check_mean_abs_diff(d, o));
      out.push_back(check_shift_independence(d, 2.0, 3.0, o));
      if (is_symmetric(d)) out.push_back(check_symmetry_duality(d, grid, o));
      const DistributionModel& other = req.second ? *req.second : d;
      if (other.support().bounded()) {
        out.push_back(check_convolution_inequality(d, other, o));
        out.push_back(check_conditioning({{0.5, d}, {0.5, other}}, o));
      }
    }
  }
  return out;
}

}  // namespace extropy
