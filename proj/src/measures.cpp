#include "extropy/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "extropy/error.hpp"
#include "extropy/orderstats.hpp"
#include "extropy/quadrature.hpp"
#include "integrals.hpp"

namespace extropy {
namespace {

using namespace family;

constexpr double kDegenerate = 1e-13;

constexpr std::array<std::pair<MeasureType, const char*>, 11> kLabels{{
    {MeasureType::Extropy, "extropy"},
    {MeasureType::CREn, "cren"},
    {MeasureType::CPEn, "cpen"},
    {MeasureType::CREx, "crex"},
    {MeasureType::CPEx, "cpex"},
    {MeasureType::CRExMin, "crex-min"},
    {MeasureType::CPExMax, "cpex-max"},
    {MeasureType::DCREx, "dcrex"},
    {MeasureType::DCRExMin, "dcrex-min"},
    {MeasureType::DCPEx, "dcpex"},
    {MeasureType::DCPExMax, "dcpex-max"},
}};

// Folds the n = 1 aliases onto their order-statistic forms.
MeasureKind normalize(MeasureKind k) {
  switch (k.type) {
    case MeasureType::CREx: return {MeasureType::CRExMin, 1, 0.0};
    case MeasureType::CPEx: return {MeasureType::CPExMax, 1, 0.0};
    case MeasureType::DCREx: return {MeasureType::DCRExMin, 1, k.t};
    case MeasureType::DCPEx: return {MeasureType::DCPExMax, 1, k.t};
    default: return k;
  }
}

void require_bounded(const DistributionModel& d) {
  if (!d.support().bounded()) {
    throw Error(ErrorCode::UnboundedSupport,
                d.name() + ": past-side measure needs a finite upper bound");
  }
}

void check_residual_age(const DistributionModel& d, double t) {
  if (!std::isfinite(t) || t < d.support().lower) {
    throw Error(ErrorCode::OutsideSupport, d.name() + ": age below the support");
  }
  if (!(d.sf(t) > 0.0)) {
    throw Error(ErrorCode::DegenerateTail, d.name() + ": sf(t) = 0");
  }
}

void check_past_age(const DistributionModel& d, double t) {
  if (!std::isfinite(t) || t > d.support().upper) {
    throw Error(ErrorCode::OutsideSupport, d.name() + ": age above the support");
  }
  if (!(d.cdf(t) > 0.0)) {
    throw Error(ErrorCode::DegenerateHead, d.name() + ": cdf(t) = 0");
  }
}

MeasureValue scaled(MeasureValue v, double factor) {
  v.value *= factor;
  v.abs_error_estimate *= std::abs(factor);
  return v;
}

double neg_r_log_r(double r) { return r > 0.0 ? -r * std::log(r) : 0.0; }

MeasureValue extropy_integral(const DistributionModel& d) {
  if (const auto* p = std::get_if<Power>(&d.params()); p && p->c <= 0.5) {
    throw Error(ErrorCode::DivergentIntegral, d.name() + ": f^2 not integrable");
  }
  if (const auto* p = std::get_if<Weibull>(&d.params()); p && p->theta <= 0.5) {
    throw Error(ErrorCode::DivergentIntegral, d.name() + ": f^2 not integrable");
  }
  const Support& s = d.support();
  std::vector<double> pts{s.lower};
  for (double p : {1e-8, 1e-4, 1e-2, 0.1, 0.5}) pts.push_back(d.quantile(p));
  for (double q : {0.1, 1e-2, 1e-4, 1e-8}) pts.push_back(d.upper_quantile(q));
  for (double k : d.kinks()) pts.push_back(k);
  pts.push_back(s.bounded() ? s.upper : d.upper_quantile(detail::kTruncationLevel));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const QuadratureResult q = integrate(
      [&](double x) {
        const double f = d.pdf(x);
        return f * f;
      },
      pts);
  if (!std::isfinite(q.value)) {
    throw Error(ErrorCode::DivergentIntegral, d.name() + ": f^2 not integrable");
  }
  return {-0.5 * q.value, Method::Quadrature, 0.5 * q.abs_error};
}

}  // namespace

// --- MeasureKind ------------------------------------------------------------

bool MeasureKind::dynamic() const noexcept {
  switch (type) {
    case MeasureType::DCREx:
    case MeasureType::DCRExMin:
    case MeasureType::DCPEx:
    case MeasureType::DCPExMax: return true;
    default: return false;
  }
}

bool MeasureKind::residual() const noexcept {
  switch (type) {
    case MeasureType::CREn:
    case MeasureType::CREx:
    case MeasureType::CRExMin:
    case MeasureType::DCREx:
    case MeasureType::DCRExMin: return true;
    default: return false;
  }
}

MeasureKind MeasureKind::at(double age) const {
  MeasureKind k = *this;
  k.t = age;
  return k;
}

std::string MeasureKind::label() const {
  for (const auto& [t, name] : kLabels) {
    if (t == type) return name;
  }
  return "unknown";
}

std::optional<MeasureType> MeasureKind::parse_type(const std::string& label) {
  for (const auto& [t, name] : kLabels) {
    if (label == name) return t;
  }
  return std::nullopt;
}

// --- closed forms -----------------------------------------------------------

std::optional<double> closed_form(const DistributionModel& d,
                                  const MeasureKind& raw) {
  const MeasureKind k = normalize(raw);
  const double n = k.n;
  const double t = k.t;
  const FamilyParams& params = d.params();
  switch (k.type) {
    case MeasureType::CRExMin:
      if (const auto* p = std::get_if<Uniform>(&params)) {
        return -(p->b - p->a) / (2.0 * (2.0 * n + 1.0));
      }
      if (const auto* p = std::get_if<FiniteRange>(&params)) {
        return -1.0 / (2.0 * p->a * (1.0 + 2.0 * n * p->b));
      }
      if (const auto* p = std::get_if<Weibull>(&params)) {
        return -std::tgamma(1.0 / p->theta) /
               (2.0 * p->theta * std::pow(2.0 * n * p->lambda, 1.0 / p->theta));
      }
      if (const auto* p = std::get_if<FoldedCramer>(&params)) {
        return -1.0 / (2.0 * (2.0 * n - 1.0) * p->theta);
      }
      if (const auto* p = std::get_if<Pareto>(&params)) {
        return -p->lambda / (2.0 * (2.0 * n * p->theta - 1.0));
      }
      if (const auto* p = std::get_if<Exponential>(&params)) {
        return -1.0 / (4.0 * n * p->lambda);
      }
      return std::nullopt;
    case MeasureType::DCRExMin:
      if (const auto* p = std::get_if<Gpd>(&params)) {
        return -(p->theta + p->lambda * t) /
               (2.0 * (2.0 * n * (1.0 + p->lambda) - p->lambda));
      }
      if (const auto* p = std::get_if<FiniteRange>(&params)) {
        const double mrl = (1.0 - p->a * t) / (p->a * (p->b + 1.0));
        return -((1.0 + p->b) / (1.0 + 2.0 * n * p->b)) * mrl / 2.0;
      }
      if (const auto* p = std::get_if<Pareto>(&params); p && k.n == 1) {
        return -(p->lambda + t) / (4.0 * p->theta - 2.0);
      }
      return std::nullopt;
    case MeasureType::CPExMax:
      if (const auto* p = std::get_if<Power>(&params)) {
        return -p->b / (2.0 * (2.0 * n * p->c + 1.0));
      }
      if (const auto* p = std::get_if<Uniform>(&params)) {
        return -(p->b - p->a) / (2.0 * (2.0 * n + 1.0));
      }
      return std::nullopt;
    case MeasureType::DCPExMax:
      if (const auto* p = std::get_if<Power>(&params)) {
        return -t / (2.0 * (2.0 * n * p->c + 1.0));
      }
      if (const auto* p = std::get_if<Uniform>(&params)) {
        return -(t - p->a) / (2.0 * (2.0 * n + 1.0));
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// --- evaluate ---------------------------------------------------------------

MeasureValue evaluate(const DistributionModel& d, const MeasureKind& raw,
                      const EvalOptions& options) {
  const MeasureKind k = normalize(raw);
  if (k.n < 1) throw Error(ErrorCode::InvalidOrder, "measure order n must be >= 1");
  const Support& s = d.support();

  // Preconditions first, so closed forms and quadrature fail alike.
  switch (k.type) {
    case MeasureType::CPEn:
    case MeasureType::CPExMax: require_bounded(d); break;
    case MeasureType::DCRExMin: check_residual_age(d, k.t); break;
    case MeasureType::DCPExMax: check_past_age(d, k.t); break;
    default: break;
  }
  if (k.type == MeasureType::CRExMin || k.type == MeasureType::DCRExMin ||
      k.type == MeasureType::CREn) {
    const double decay = k.type == MeasureType::CREn ? 1.0 : 2.0 * k.n;
    if (!s.bounded() && d.tail_index() * decay <= 1.0) {
      throw Error(ErrorCode::DivergentIntegral,
                  d.name() + ": integral diverges for this order");
    }
  }

  if (options.allow_closed_form) {
    if (auto v = closed_form(d, k)) return {*v, Method::ClosedForm, 0.0};
  }

  const double p = 2.0 * k.n;
  auto power_p = [p](double r) { return std::pow(r, p); };
  switch (k.type) {
    case MeasureType::Extropy:
      return extropy_integral(d);
    case MeasureType::CREn:
      return detail::integrate_residual(d, s.lower, 1.0, neg_r_log_r);
    case MeasureType::CPEn:
      return detail::integrate_past(d, s.upper, neg_r_log_r);
    case MeasureType::CRExMin:
      return scaled(detail::integrate_residual(d, s.lower, p, power_p), -0.5);
    case MeasureType::CPExMax:
      return scaled(detail::integrate_past(d, s.upper, power_p), -0.5);
    case MeasureType::DCRExMin:
      return scaled(detail::integrate_residual(d, k.t, p, power_p), -0.5);
    case MeasureType::DCPExMax:
      return scaled(detail::integrate_past(d, k.t, power_p), -0.5);
    default:
      break;
  }
  throw Error(ErrorCode::Schema, "unsupported measure kind");
}

MeasureValue expected_min(const DistributionModel& d, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "expected_min: n must be >= 1");
  if (const auto* p = std::get_if<Exponential>(&d.params())) {
    return {1.0 / (n * p->lambda), Method::ClosedForm, 0.0};
  }
  return min_order(d, n).mean();
}

MeasureValue equilibrium_extropy(const DistributionModel& d) {
  const MeasureValue mu = d.mean();
  const double lower = d.support().lower;
  MeasureValue sq = detail::integrate_residual(
      d, lower, 2.0, [](double r) { return r * r; });
  const double inv = 1.0 / (mu.value * mu.value);
  return {-0.5 * (lower + sq.value) * inv, Method::Quadrature,
          0.5 * sq.abs_error_estimate * inv +
              std::abs(sq.value) * inv * 2.0 * mu.abs_error_estimate / mu.value};
}

MeasureValue crex_min_quantile_form(const DistributionModel& d, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "n must be >= 1");
  const double p = 2.0 * n;
  auto density_at = [&](double x) {
    const double f = d.pdf(x);
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw Error(ErrorCode::VanishingDensity,
                  d.name() + ": density vanishes inside the support");
    }
    return f;
  };
  // u in (0, 1/2]: x = upper_quantile(u).  u in [1/2, 1): substitute
  // v = 1 - u so that x = quantile(v) stays accurate near the lower end.
  auto upper_half = [&](double u) {
    return std::pow(u, p) / density_at(d.upper_quantile(u));
  };
  auto lower_half = [&](double v) {
    return std::pow(1.0 - v, p) / density_at(d.quantile(v));
  };
  const std::vector<double> pts{0.0, 1e-12, 1e-8, 1e-4, 1e-2, 0.1, 0.25, 0.5};
  const QuadratureResult a = integrate(upper_half, pts);
  const QuadratureResult b = integrate(lower_half, pts);
  const double value = -0.5 * (a.value + b.value);
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::DivergentIntegral, d.name() + ": integral diverges");
  }
  return {value, Method::Quadrature, 0.5 * (a.abs_error + b.abs_error)};
}

DerivativeCheck dcrex_min_derivative(const DistributionModel& d, int n,
                                     double t) {
  const double h = 1e-5 * std::max(1.0, t);
  const double mid = evaluate(d, MeasureKind::dcrex_min(n, t)).value;
  const double up = evaluate(d, MeasureKind::dcrex_min(n, t + h)).value;
  const double down = evaluate(d, MeasureKind::dcrex_min(n, t - h)).value;
  return {(up - down) / (2.0 * h), 2.0 * n * d.hazard_rate(t) * mid + 0.5};
}

// --- curves -----------------------------------------------------------------

Curve curve(const DistributionModel& d, const MeasureKind& kind,
            std::span<const double> grid, Abscissa abscissa, unsigned threads) {
  if (!kind.dynamic()) {
    throw Error(ErrorCode::InvalidGrid, "curve: measure must be dynamic");
  }
  if (grid.empty()) throw Error(ErrorCode::InvalidGrid, "curve: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::InvalidGrid, "curve: grid must be strictly increasing");
    }
  }
  std::vector<std::optional<double>> values(grid.size());
  auto eval_point = [&](std::size_t i) {
    const double x = grid[i];
    double age = x;
    if (abscissa == Abscissa::LogSurvival) {
      if (!(x > 0.0 && x < 1.0)) return;
      age = -std::log(x);
    }
    const double mass = kind.residual() ? d.sf(age) : d.cdf(age);
    if (!(mass >= kDegenerate)) return;
    try {
      values[i] = evaluate(d, kind.at(age)).value;
    } catch (const Error&) {
      // reported through Curve::rejected
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || grid.size() < 2 * threads) {
    for (std::size_t i = 0; i < grid.size(); ++i) eval_point(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += threads) eval_point(i);
      });
    }
  }

  Curve out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i]) {
      out.points.push_back({grid[i], *values[i]});
    } else {
      out.rejected.push_back(grid[i]);
    }
  }
  return out;
}

int slope_sign_changes(const Curve& c, double flat) {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    const double diff = c.points[i].value - c.points[i - 1].value;
    if (std::abs(diff) <= flat) continue;
    const int sign = diff > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

std::vector<double> open_grid(double a, double b, int n) {
  std::vector<double> g(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * (i + 1.0) / (n + 1.0);
  return g;
}

std::vector<double> closed_grid(double a, double b, int n) {
  if (n == 1) return {a};
  std::vector<double> g(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1.0);
  return g;
}

}  // namespace extropy
