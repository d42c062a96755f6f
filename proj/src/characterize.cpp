#include "extropy/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "extropy/error.hpp"

namespace extropy {
namespace {

bool degenerate_code(ErrorCode c) {
  return c == ErrorCode::DegenerateTail || c == ErrorCode::DegenerateHead ||
         c == ErrorCode::OutsideSupport;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Ratios num(t) / den(t) over the grid, skipping degenerate points.
template <class F>
std::vector<std::pair<double, double>> ratios(std::span<const double> grid,
                                              F&& ratio_at) {
  std::vector<std::pair<double, double>> out;
  for (double t : grid) {
    try {
      const double r = ratio_at(t);
      if (std::isfinite(r)) out.emplace_back(t, r);
    } catch (const Error& e) {
      if (!degenerate_code(e.code())) throw;
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::InvalidGrid, "no usable grid points");
  }
  return out;
}

// Fills c_hat (median), dispersion and tolerance; true when constant.
bool constancy(const std::vector<std::pair<double, double>>& r,
               CharacterizationResult& res) {
  std::vector<double> v;
  for (const auto& p : r) v.push_back(p.second);
  const double med = median(v);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  res.c_hat = med;
  res.dispersion = *hi - *lo;
  res.tolerance = constancy_tolerance(med);
  res.points_used = static_cast<int>(v.size());
  return res.dispersion <= res.tolerance;
}

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::Exponential: return "Exponential";
    case Model::ParetoII: return "ParetoII";
    case Model::PowerGPD: return "PowerGPD";
    case Model::PowerBounded: return "PowerBounded";
    case Model::NotConstant: return "NotConstant";
  }
  return "NotConstant";
}

std::string to_string(EqualityMode m) {
  switch (m) {
    case EqualityMode::Location: return "location";
    case EqualityMode::Scale: return "scale";
    case EqualityMode::LocationScale: return "location-scale";
  }
  return "location";
}

CheckSchedule::CheckSchedule() {
  for (int n = 1; n <= 12; ++n) orders.push_back(n);
}

CheckSchedule::CheckSchedule(std::vector<int> o) : orders(std::move(o)) {
  if (orders.empty()) throw Error(ErrorCode::InvalidOrder, "empty schedule");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1 || (i > 0 && orders[i] <= orders[i - 1])) {
      throw Error(ErrorCode::InvalidOrder,
                  "schedule must be strictly increasing positive integers");
    }
  }
}

double constancy_tolerance(double median) {
  return std::max(1e-6, 1e-4 * std::abs(median));
}

CharacterizationResult gpd_ratio_test(const DistributionModel& d, int n,
                                      std::span<const double> grid) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  const auto r = ratios(grid, [&](double t) {
    return evaluate(d, MeasureKind::dcrex_min(n, t)).value /
           d.mean_residual_life(t).value;
  });
  CharacterizationResult res;
  const bool constant = constancy(r, res);
  res.c_hat = -res.c_hat;
  if (!constant) {
    res.model = Model::NotConstant;
    res.note = "ratio to mrl is not constant";
    return res;
  }
  const double c = res.c_hat;
  const double exp_c = 1.0 / (4.0 * n);
  double lambda = (1.0 / (2.0 * c) - 2.0 * n) / (2.0 * n - 1.0);
  if (std::abs(c - exp_c) <= res.tolerance) {
    res.model = Model::Exponential;
    lambda = 0.0;
  } else if (c < exp_c) {
    res.model = Model::ParetoII;
  } else if (c < 0.5) {
    res.model = Model::PowerGPD;
  } else {
    res.model = Model::NotConstant;
    res.note = "constant ratio " + fmt(c) + " outside the GPD range";
    return res;
  }
  std::vector<double> thetas;
  for (const auto& [t, ratio] : r) {
    thetas.push_back(d.mean_residual_life(t).value - lambda * t);
  }
  res.recovered_params["lambda"] = lambda;
  res.recovered_params["theta"] = median(thetas);
  return res;
}

CharacterizationResult gpd_slope_test(const Curve& curve, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  const auto& p = curve.points;
  if (p.size() < 3) {
    throw Error(ErrorCode::InvalidGrid, "slope test needs at least 3 points");
  }
  const double m = static_cast<double>(p.size());
  double st = 0.0, sv = 0.0;
  for (const auto& q : p) {
    st += q.t;
    sv += q.value;
  }
  const double tbar = st / m, vbar = sv / m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& q : p) {
    sxx += (q.t - tbar) * (q.t - tbar);
    sxy += (q.t - tbar) * (q.value - vbar);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::InvalidGrid, "degenerate abscissae");
  const double slope = sxy / sxx;
  const double intercept = vbar - slope * tbar;

  CharacterizationResult res;
  std::vector<double> values;
  for (const auto& q : p) {
    values.push_back(q.value);
    res.dispersion = std::max(res.dispersion,
                              std::abs(q.value - (intercept + slope * q.t)));
  }
  res.c_hat = slope;
  res.tolerance = constancy_tolerance(median(values));
  res.points_used = static_cast<int>(p.size());
  if (res.dispersion > res.tolerance) {
    res.model = Model::NotConstant;
    res.note = "curve is not a straight line";
    return res;
  }
  const double c1 = 4.0 * n * slope / (2.0 * slope - 1.0);
  const double lambda = c1 / (1.0 - c1);
  const double theta = -intercept * 2.0 * (2.0 * n + (2.0 * n - 1.0) * lambda);
  res.recovered_params["c1"] = c1;
  res.recovered_params["lambda"] = lambda;
  res.recovered_params["theta"] = theta;
  const double span = p.back().t - p.front().t;
  if (std::abs(slope) * span <= res.tolerance) {
    res.model = Model::Exponential;
  } else if (!(lambda > -1.0) || !(theta > 0.0)) {
    res.model = Model::NotConstant;
    res.note = "line does not match a GPD";
  } else {
    res.model = lambda > 0.0 ? Model::ParetoII : Model::PowerGPD;
  }
  return res;
}

CharacterizationResult power_ratio_test(const DistributionModel& d, int n,
                                        std::span<const double> grid) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  if (!d.support().bounded()) {
    throw Error(ErrorCode::UnboundedSupport,
                "power test needs bounded support: " + d.name());
  }
  const auto r = ratios(grid, [&](double t) {
    return evaluate(d, MeasureKind::dcpex_max(n, t)).value /
           d.expected_inactivity_time(t).value;
  });
  CharacterizationResult res;
  if (!constancy(r, res)) {
    res.model = Model::NotConstant;
    res.note = "ratio to eit is not constant";
    return res;
  }
  const double k = res.c_hat;
  const double c = -(1.0 + 2.0 * k) / (1.0 + 4.0 * k * n);
  if (!(c > 0.0) || !std::isfinite(c)) {
    res.model = Model::NotConstant;
    res.note = "constant ratio " + fmt(k) + " matches no power law";
    return res;
  }
  res.model = Model::PowerBounded;
  res.recovered_params["k"] = k;
  res.recovered_params["c"] = c;
  res.recovered_params["b"] = d.support().upper;
  return res;
}

CheckReport family_equality_check(const DistributionModel& d1,
                                  const DistributionModel& d2,
                                  const CheckSchedule& schedule,
                                  EqualityMode mode, const CheckOptions& opts) {
  auto half_line = [](const DistributionModel& d) {
    return d.support().lower == 0.0 && !d.support().bounded();
  };
  if (mode == EqualityMode::Scale && !(half_line(d1) && half_line(d2))) {
    throw Error(ErrorCode::SupportMismatch,
                "scale comparison needs support [0, inf) for both models");
  }
  if (mode == EqualityMode::LocationScale &&
      !(d1.support().bounded() && d2.support().bounded())) {
    throw Error(ErrorCode::UnboundedSupport,
                "location-scale comparison needs bounded support");
  }
  auto quantity = [&](const DistributionModel& d, int n) -> MeasureValue {
    switch (mode) {
      case EqualityMode::Location:
        return evaluate(d, MeasureKind::crex_min(n));
      case EqualityMode::Scale: {
        const MeasureValue a = evaluate(d, MeasureKind::crex_min(n));
        const MeasureValue b = expected_min(d, n);
        const double r = a.value / b.value;
        return {r, Method::Quadrature,
                std::abs(r) * (a.abs_error_estimate / std::abs(a.value) +
                               b.abs_error_estimate / std::abs(b.value))};
      }
      case EqualityMode::LocationScale: {
        const MeasureValue a = evaluate(d, MeasureKind::cpex_max(n));
        const MeasureValue b = evaluate(d, MeasureKind::cpex());
        const double r = a.value / b.value;
        return {r, Method::Quadrature,
                std::abs(r) * (a.abs_error_estimate / std::abs(a.value) +
                               b.abs_error_estimate / std::abs(b.value))};
      }
    }
    return {};
  };

  CheckReport rep;
  rep.check_id = "family_equality_" + to_string(mode);
  rep.tolerance = opts.tolerance;
  for (int n : schedule.orders) {
    const MeasureValue a = quantity(d1, n);
    const MeasureValue b = quantity(d2, n);
    const double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
    const double margin =
        -std::abs(a.value - b.value) / scale +
        (a.abs_error_estimate + b.abs_error_estimate) / scale;
    ++rep.points_tested;
    if (rep.points_tested == 1 || margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_point = n;
    }
  }
  rep.verdict = rep.worst_margin >= -rep.tolerance ? Verdict::Holds
                                                   : Verdict::Fails;
  rep.note = "finite schedule of " + std::to_string(schedule.orders.size()) +
             " orders up to n=" + std::to_string(schedule.orders.back()) +
             ": evidence, not proof";
  return rep;
}

}  // namespace extropy
