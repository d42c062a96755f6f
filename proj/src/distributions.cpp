#include "extropy/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "extropy/error.hpp"
#include "integrals.hpp"

namespace extropy {

namespace detail {
struct ModelState {
  FamilyParams params;
  Support support;
};
}  // namespace detail

namespace {

using namespace family;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(ErrorCode::ParamDomain, what);
}

void require(bool ok, const char* what) {
  if (!ok) domain_error(what);
}

bool finite(double v) { return std::isfinite(v); }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Positive terms summed from the smallest upward.
double sum_ascending(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double v : terms) s += v;
  return s;
}

// --- validation ---------------------------------------------------------

void validate(const Uniform& p) {
  require(finite(p.a) && finite(p.b), "uniform: parameters must be finite");
  require(p.a >= 0.0, "uniform: a must be >= 0");
  require(p.b > p.a, "uniform: b must exceed a");
}
void validate(const FiniteRange& p) {
  require(finite(p.a) && p.a > 0.0, "finite_range: a must be > 0");
  require(finite(p.b) && p.b > 0.0, "finite_range: b must be > 0");
}
void validate(const Weibull& p) {
  require(finite(p.lambda) && p.lambda > 0.0, "weibull: lambda must be > 0");
  require(finite(p.theta) && p.theta > 0.0, "weibull: theta must be > 0");
}
void validate(const FoldedCramer& p) {
  require(finite(p.theta) && p.theta > 0.0, "folded_cramer: theta must be > 0");
}
void validate(const Pareto& p) {
  require(finite(p.lambda) && p.lambda > 0.0, "pareto: lambda must be > 0");
  require(finite(p.theta) && p.theta > 1.0, "pareto: theta must be > 1");
}
void validate(const Gpd& p) {
  require(finite(p.theta) && p.theta > 0.0, "gpd: theta must be > 0");
  require(finite(p.lambda) && p.lambda > -1.0, "gpd: lambda must be > -1");
}
void validate(const Power& p) {
  require(finite(p.b) && p.b > 0.0, "power: b must be > 0");
  require(finite(p.c) && p.c > 0.0, "power: c must be > 0");
}
void validate(const Exponential& p) {
  require(finite(p.lambda) && p.lambda > 0.0, "exponential: lambda must be > 0");
}
void validate(const MixtureFig21&) {}
void validate(const Example32&) {}
void validate(const Affine& p) {
  if (!(finite(p.scale) && p.scale > 0.0)) {
    throw Error(ErrorCode::InvalidScale, "affine: scale must be > 0");
  }
  require(finite(p.shift) && p.shift >= 0.0, "affine: shift must be >= 0");
}
void validate(const MinOrder& p) {
  if (p.n < 1) throw Error(ErrorCode::InvalidOrder, "min_order: n must be >= 1");
}
void validate(const MaxOrder& p) {
  if (p.n < 1) throw Error(ErrorCode::InvalidOrder, "max_order: n must be >= 1");
}
void validate(const KthOrder& p) {
  if (p.n < 1 || p.k < 1 || p.k > p.n || p.n > 60) {
    throw Error(ErrorCode::InvalidOrder,
                "order statistic requires 1 <= k <= n <= 60");
  }
}
void validate(const Mixture& p) {
  if (p.components.empty()) {
    throw Error(ErrorCode::BadWeights, "mixture: no components");
  }
  double total = 0.0;
  for (const auto& [w, d] : p.components) {
    if (!(finite(w) && w > 0.0)) {
      throw Error(ErrorCode::BadWeights, "mixture: weights must be positive");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadWeights, "mixture: weights must sum to 1");
  }
}
void validate(const Tabulated& p) {
  require(p.x.size() >= 2 && p.x.size() == p.F.size(),
          "tabulated: need matching grids of size >= 2");
  require(p.x.front() >= 0.0, "tabulated: grid must start at >= 0");
  for (std::size_t i = 1; i < p.x.size(); ++i) {
    require(p.x[i] > p.x[i - 1], "tabulated: grid must be increasing");
    require(p.F[i] >= p.F[i - 1], "tabulated: cdf must be nondecreasing");
  }
  require(p.F.front() == 0.0 && p.F.back() == 1.0,
          "tabulated: cdf must run from 0 to 1");
}

// --- support ------------------------------------------------------------

Support support_of(const Uniform& p) { return {p.a, p.b}; }
Support support_of(const FiniteRange& p) { return {0.0, 1.0 / p.a}; }
Support support_of(const Weibull&) { return {}; }
Support support_of(const FoldedCramer&) { return {}; }
Support support_of(const Pareto&) { return {}; }
Support support_of(const Gpd& p) {
  return p.lambda < 0.0 ? Support{0.0, -p.theta / p.lambda} : Support{};
}
Support support_of(const Power& p) { return {0.0, p.b}; }
Support support_of(const Exponential&) { return {}; }
Support support_of(const MixtureFig21&) { return {}; }
Support support_of(const Example32&) { return {0.0, 2.0}; }
Support support_of(const Affine& p) {
  const Support& s = p.base.support();
  return {p.shift + p.scale * s.lower, p.shift + p.scale * s.upper};
}
Support support_of(const MinOrder& p) { return p.base.support(); }
Support support_of(const MaxOrder& p) { return p.base.support(); }
Support support_of(const KthOrder& p) { return p.base.support(); }
Support support_of(const Mixture& p) {
  Support s{kInfinity, 0.0};
  for (const auto& [w, d] : p.components) {
    s.lower = std::min(s.lower, d.support().lower);
    s.upper = std::max(s.upper, d.support().upper);
  }
  return s;
}
Support support_of(const Tabulated& p) { return {p.x.front(), p.x.back()}; }

// --- distribution kernels, evaluated strictly inside the support ---------

double gpd_log_sf(const Gpd& p, double x) {
  if (p.lambda == 0.0) return -x / p.theta;
  return -(1.0 + p.lambda) / p.lambda * std::log1p(p.lambda * x / p.theta);
}

double example32_cdf(double x) {
  return x <= 1.0 ? std::exp(-0.5 - 1.0 / x) : std::exp(-2.0 + 0.5 * x * x);
}

struct Kernel {
  double x;

  double cdf(const Uniform& p) const { return (x - p.a) / (p.b - p.a); }
  double sf(const Uniform& p) const { return (p.b - x) / (p.b - p.a); }
  double pdf(const Uniform& p) const { return 1.0 / (p.b - p.a); }

  double cdf(const FiniteRange& p) const {
    return -std::expm1(p.b * std::log1p(-p.a * x));
  }
  double sf(const FiniteRange& p) const { return std::pow(1.0 - p.a * x, p.b); }
  double pdf(const FiniteRange& p) const {
    return p.a * p.b * std::pow(1.0 - p.a * x, p.b - 1.0);
  }

  double cdf(const Weibull& p) const {
    return -std::expm1(-p.lambda * std::pow(x, p.theta));
  }
  double sf(const Weibull& p) const {
    return std::exp(-p.lambda * std::pow(x, p.theta));
  }
  double pdf(const Weibull& p) const {
    return p.lambda * p.theta * std::pow(x, p.theta - 1.0) * sf(p);
  }

  double cdf(const FoldedCramer& p) const {
    return p.theta * x / (1.0 + p.theta * x);
  }
  double sf(const FoldedCramer& p) const { return 1.0 / (1.0 + p.theta * x); }
  double pdf(const FoldedCramer& p) const {
    const double s = sf(p);
    return p.theta * s * s;
  }

  double cdf(const Pareto& p) const {
    return -std::expm1(-p.theta * std::log1p(x / p.lambda));
  }
  double sf(const Pareto& p) const {
    return std::exp(-p.theta * std::log1p(x / p.lambda));
  }
  double pdf(const Pareto& p) const {
    return p.theta / p.lambda *
           std::exp(-(p.theta + 1.0) * std::log1p(x / p.lambda));
  }

  double cdf(const Gpd& p) const { return -std::expm1(gpd_log_sf(p, x)); }
  double sf(const Gpd& p) const { return std::exp(gpd_log_sf(p, x)); }
  double pdf(const Gpd& p) const {
    // The log form gives inf - inf at the finite endpoint when lambda < 0.
    if (p.lambda < 0.0) {
      return (1.0 + p.lambda) / p.theta *
             std::pow(1.0 + p.lambda * x / p.theta, -(1.0 / p.lambda + 2.0));
    }
    const double z = std::log1p(p.lambda * x / p.theta);
    return (1.0 + p.lambda) / p.theta * std::exp(gpd_log_sf(p, x) - z);
  }

  double cdf(const Power& p) const { return std::pow(x / p.b, p.c); }
  double sf(const Power& p) const {
    return -std::expm1(p.c * std::log(x / p.b));
  }
  double pdf(const Power& p) const {
    return p.c / p.b * std::pow(x / p.b, p.c - 1.0);
  }

  double cdf(const Exponential& p) const { return -std::expm1(-p.lambda * x); }
  double sf(const Exponential& p) const { return std::exp(-p.lambda * x); }
  double pdf(const Exponential& p) const {
    return p.lambda * std::exp(-p.lambda * x);
  }

  double cdf(const MixtureFig21&) const {
    return std::expm1(-x) * std::expm1(-2.0 * x);
  }
  double sf(const MixtureFig21&) const {
    return std::exp(-x) + std::exp(-2.0 * x) - std::exp(-3.0 * x);
  }
  double pdf(const MixtureFig21&) const {
    return -std::exp(-x) * std::expm1(-2.0 * x) -
           2.0 * std::exp(-2.0 * x) * std::expm1(-x);
  }

  double cdf(const Example32&) const { return example32_cdf(x); }
  double sf(const Example32&) const {
    if (x <= 1.0) return -std::expm1(-0.5 - 1.0 / x);
    return -std::expm1(-2.0 + 0.5 * x * x);
  }
  // Left limit at the junctions x = 1 and x = 2.
  double pdf(const Example32&) const {
    if (x <= 0.0) return 0.0;
    return x <= 1.0 ? example32_cdf(x) / (x * x) : x * example32_cdf(x);
  }

  double cdf(const Affine& p) const { return p.base.cdf(z(p)); }
  double sf(const Affine& p) const { return p.base.sf(z(p)); }
  double pdf(const Affine& p) const { return p.base.pdf(z(p)) / p.scale; }
  double z(const Affine& p) const { return (x - p.shift) / p.scale; }

  double cdf(const MinOrder& p) const {
    return -std::expm1(p.n * std::log1p(-p.base.cdf(x)));
  }
  double sf(const MinOrder& p) const { return std::pow(p.base.sf(x), p.n); }
  double pdf(const MinOrder& p) const {
    return p.n * std::pow(p.base.sf(x), p.n - 1) * p.base.pdf(x);
  }

  double cdf(const MaxOrder& p) const { return std::pow(p.base.cdf(x), p.n); }
  double sf(const MaxOrder& p) const {
    return -std::expm1(p.n * std::log1p(-p.base.sf(x)));
  }
  double pdf(const MaxOrder& p) const {
    return p.n * std::pow(p.base.cdf(x), p.n - 1) * p.base.pdf(x);
  }

  // P(X_{k:n} <= x) = sum_{i>=k} C(n,i) F^i S^(n-i); the complement sums
  // i < k.  Each side is a sum of positive terms.
  double cdf(const KthOrder& p) const {
    const double F = p.base.cdf(x), S = p.base.sf(x);
    std::vector<double> terms;
    for (int i = p.k; i <= p.n; ++i) {
      terms.push_back(binomial(p.n, i) * std::pow(F, i) * std::pow(S, p.n - i));
    }
    return std::min(1.0, sum_ascending(std::move(terms)));
  }
  double sf(const KthOrder& p) const {
    const double F = p.base.cdf(x), S = p.base.sf(x);
    std::vector<double> terms;
    for (int i = 0; i < p.k; ++i) {
      terms.push_back(binomial(p.n, i) * std::pow(F, i) * std::pow(S, p.n - i));
    }
    return std::min(1.0, sum_ascending(std::move(terms)));
  }
  double pdf(const KthOrder& p) const {
    const double F = p.base.cdf(x), S = p.base.sf(x);
    return p.n * binomial(p.n - 1, p.k - 1) * std::pow(F, p.k - 1) *
           std::pow(S, p.n - p.k) * p.base.pdf(x);
  }

  double cdf(const Mixture& p) const {
    double s = 0.0;
    for (const auto& [w, d] : p.components) s += w * d.cdf(x);
    return std::min(1.0, s);
  }
  double sf(const Mixture& p) const {
    double s = 0.0;
    for (const auto& [w, d] : p.components) s += w * d.sf(x);
    return std::min(1.0, s);
  }
  double pdf(const Mixture& p) const {
    double s = 0.0;
    for (const auto& [w, d] : p.components) s += w * d.pdf(x);
    return s;
  }

  double cdf(const Tabulated& p) const {
    const auto i = cell(p);
    const double u = (x - p.x[i]) / (p.x[i + 1] - p.x[i]);
    return p.F[i] + u * (p.F[i + 1] - p.F[i]);
  }
  double sf(const Tabulated& p) const { return 1.0 - cdf(p); }
  double pdf(const Tabulated& p) const {
    const auto i = cell(p);
    return (p.F[i + 1] - p.F[i]) / (p.x[i + 1] - p.x[i]);
  }
  std::size_t cell(const Tabulated& p) const {
    auto it = std::upper_bound(p.x.begin(), p.x.end(), x);
    std::size_t i = static_cast<std::size_t>(it - p.x.begin());
    i = std::clamp<std::size_t>(i, 1, p.x.size() - 1);
    return i - 1;
  }
};

// --- closed-form inverses; nullopt means "use bisection" ------------------

struct Inverse {
  // Inverse cdf at p.
  std::optional<double> quantile(const Uniform& d, double p) const {
    return d.a + p * (d.b - d.a);
  }
  std::optional<double> quantile(const FiniteRange& d, double p) const {
    return -std::expm1(std::log1p(-p) / d.b) / d.a;
  }
  std::optional<double> quantile(const Weibull& d, double p) const {
    return std::pow(-std::log1p(-p) / d.lambda, 1.0 / d.theta);
  }
  std::optional<double> quantile(const FoldedCramer& d, double p) const {
    return p / ((1.0 - p) * d.theta);
  }
  std::optional<double> quantile(const Pareto& d, double p) const {
    return d.lambda * std::expm1(-std::log1p(-p) / d.theta);
  }
  std::optional<double> quantile(const Gpd& d, double p) const {
    return upper(d, std::log1p(-p));
  }
  std::optional<double> quantile(const Power& d, double p) const {
    return d.b * std::pow(p, 1.0 / d.c);
  }
  std::optional<double> quantile(const Exponential& d, double p) const {
    return -std::log1p(-p) / d.lambda;
  }
  std::optional<double> quantile(const Affine& d, double p) const {
    return d.shift + d.scale * d.base.quantile(p);
  }
  std::optional<double> quantile(const MinOrder& d, double p) const {
    return by_survival(d.base, std::log1p(-p) / d.n);
  }
  std::optional<double> quantile(const MaxOrder& d, double p) const {
    return by_cdf(d.base, std::log(p) / d.n);
  }
  template <class T>
  std::optional<double> quantile(const T&, double) const {
    return std::nullopt;
  }

  // Inverse survival function at q.
  std::optional<double> upper_quantile(const Uniform& d, double q) const {
    return d.b - q * (d.b - d.a);
  }
  std::optional<double> upper_quantile(const FiniteRange& d, double q) const {
    return -std::expm1(std::log(q) / d.b) / d.a;
  }
  std::optional<double> upper_quantile(const Weibull& d, double q) const {
    return std::pow(-std::log(q) / d.lambda, 1.0 / d.theta);
  }
  std::optional<double> upper_quantile(const FoldedCramer& d, double q) const {
    return (1.0 / q - 1.0) / d.theta;
  }
  std::optional<double> upper_quantile(const Pareto& d, double q) const {
    return d.lambda * std::expm1(-std::log(q) / d.theta);
  }
  std::optional<double> upper_quantile(const Gpd& d, double q) const {
    return upper(d, std::log(q));
  }
  std::optional<double> upper_quantile(const Power& d, double q) const {
    return d.b * std::exp(std::log1p(-q) / d.c);
  }
  std::optional<double> upper_quantile(const Exponential& d, double q) const {
    return -std::log(q) / d.lambda;
  }
  std::optional<double> upper_quantile(const Affine& d, double q) const {
    return d.shift + d.scale * d.base.upper_quantile(q);
  }
  std::optional<double> upper_quantile(const MinOrder& d, double q) const {
    return by_survival(d.base, std::log(q) / d.n);
  }
  std::optional<double> upper_quantile(const MaxOrder& d, double q) const {
    return by_cdf(d.base, std::log1p(-q) / d.n);
  }
  template <class T>
  std::optional<double> upper_quantile(const T&, double) const {
    return std::nullopt;
  }

  // Point of `base` with log sf == log_s, inverting whichever tail keeps
  // the target probability away from 1.
  static double by_survival(const DistributionModel& base, double log_s) {
    if (log_s < -std::log(2.0)) return base.upper_quantile(std::exp(log_s));
    return base.quantile(-std::expm1(log_s));
  }
  static double by_cdf(const DistributionModel& base, double log_F) {
    if (log_F < -std::log(2.0)) return base.quantile(std::exp(log_F));
    return base.upper_quantile(-std::expm1(log_F));
  }

  // GPD point with log sf == log_q.
  static double upper(const Gpd& d, double log_q) {
    if (d.lambda == 0.0) return -d.theta * log_q;
    return d.theta / d.lambda *
           std::expm1(-d.lambda / (1.0 + d.lambda) * log_q);
  }
};

// Bisection on a monotone function over the support; `below(x)` is true
// while x lies left of the target.
template <class Below>
double bisect(const Support& s, Below below) {
  double lo = s.lower;
  double hi = s.upper;
  if (!s.bounded()) {
    hi = std::max(1.0, 2.0 * s.lower);
    while (below(hi)) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) return lo;
    }
  }
  for (int iter = 0; iter < 400 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    (below(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// --- closed-form reliability functionals --------------------------------

struct Closed {
  // E(X) when the family admits an analytic value.
  std::optional<double> mean(const Uniform& p) const { return 0.5 * (p.a + p.b); }
  std::optional<double> mean(const FiniteRange& p) const {
    return 1.0 / (p.a * (p.b + 1.0));
  }
  std::optional<double> mean(const Weibull& p) const {
    return std::tgamma(1.0 + 1.0 / p.theta) * std::pow(p.lambda, -1.0 / p.theta);
  }
  std::optional<double> mean(const Pareto& p) const {
    return p.lambda / (p.theta - 1.0);
  }
  std::optional<double> mean(const Gpd& p) const { return p.theta; }
  std::optional<double> mean(const Power& p) const {
    return p.b * p.c / (p.c + 1.0);
  }
  std::optional<double> mean(const Exponential& p) const { return 1.0 / p.lambda; }
  std::optional<double> mean(const MixtureFig21&) const { return 7.0 / 6.0; }
  std::optional<double> mean(const MinOrder& p) const {
    if (const auto* e = std::get_if<Exponential>(&p.base.params())) {
      return 1.0 / (p.n * e->lambda);
    }
    return std::nullopt;
  }
  template <class T>
  std::optional<double> mean(const T&) const {
    return std::nullopt;
  }

  // Mean residual life at t inside the support.
  std::optional<double> mrl(const Uniform& p, double t) const {
    return 0.5 * (p.b - t);
  }
  std::optional<double> mrl(const FiniteRange& p, double t) const {
    return (1.0 - p.a * t) / (p.a * (p.b + 1.0));
  }
  std::optional<double> mrl(const Pareto& p, double t) const {
    return (t + p.lambda) / (p.theta - 1.0);
  }
  std::optional<double> mrl(const Gpd& p, double t) const {
    return p.theta + p.lambda * t;
  }
  std::optional<double> mrl(const Exponential& p, double) const {
    return 1.0 / p.lambda;
  }
  template <class T>
  std::optional<double> mrl(const T&, double) const {
    return std::nullopt;
  }
};

// --- tail index ---------------------------------------------------------

struct Tail {
  double operator()(const FoldedCramer&) const { return 1.0; }
  double operator()(const Pareto& p) const { return p.theta; }
  double operator()(const Gpd& p) const {
    return p.lambda > 0.0 ? 1.0 + 1.0 / p.lambda : kInfinity;
  }
  double operator()(const Affine& p) const { return p.base.tail_index(); }
  double operator()(const MinOrder& p) const { return p.n * p.base.tail_index(); }
  double operator()(const MaxOrder& p) const { return p.base.tail_index(); }
  double operator()(const KthOrder& p) const {
    return (p.n - p.k + 1) * p.base.tail_index();
  }
  double operator()(const Mixture& p) const {
    double a = kInfinity;
    for (const auto& [w, d] : p.components) a = std::min(a, d.tail_index());
    return a;
  }
  template <class T>
  double operator()(const T&) const {
    return kInfinity;
  }
};

std::string describe(const FamilyParams& params) {
  std::ostringstream os;
  os.precision(12);
  std::visit(
      Overloaded{
          [&](const Uniform& p) { os << "Uniform(a=" << p.a << ", b=" << p.b << ")"; },
          [&](const FiniteRange& p) {
            os << "FiniteRange(a=" << p.a << ", b=" << p.b << ")";
          },
          [&](const Weibull& p) {
            os << "Weibull(lambda=" << p.lambda << ", theta=" << p.theta << ")";
          },
          [&](const FoldedCramer& p) { os << "FoldedCramer(theta=" << p.theta << ")"; },
          [&](const Pareto& p) {
            os << "Pareto(lambda=" << p.lambda << ", theta=" << p.theta << ")";
          },
          [&](const Gpd& p) {
            os << "GPD(theta=" << p.theta << ", lambda=" << p.lambda << ")";
          },
          [&](const Power& p) { os << "Power(b=" << p.b << ", c=" << p.c << ")"; },
          [&](const Exponential& p) { os << "Exponential(lambda=" << p.lambda << ")"; },
          [&](const MixtureFig21&) { os << "MixtureFig21"; },
          [&](const Example32&) { os << "Example32"; },
          [&](const Affine& p) {
            os << "Affine(" << p.base.name() << ", scale=" << p.scale
               << ", shift=" << p.shift << ")";
          },
          [&](const MinOrder& p) { os << "Min(" << p.base.name() << ", n=" << p.n << ")"; },
          [&](const MaxOrder& p) { os << "Max(" << p.base.name() << ", n=" << p.n << ")"; },
          [&](const KthOrder& p) {
            os << "Order(" << p.base.name() << ", " << p.k << ":" << p.n << ")";
          },
          [&](const Mixture& p) {
            os << "Mixture(";
            for (std::size_t i = 0; i < p.components.size(); ++i) {
              os << (i ? ", " : "") << p.components[i].first << "*"
                 << p.components[i].second.name();
            }
            os << ")";
          },
          [&](const Tabulated& p) { os << "Tabulated(" << p.x.size() << " nodes)"; },
      },
      params);
  return os.str();
}

}  // namespace

// --- DistributionModel ----------------------------------------------------

DistributionModel::DistributionModel(FamilyParams params) {
  auto state = std::make_shared<detail::ModelState>();
  std::visit([](const auto& p) { validate(p); }, params);
  state->support = std::visit([](const auto& p) { return support_of(p); }, params);
  state->params = std::move(params);
  state_ = std::move(state);
}

Family DistributionModel::family() const noexcept {
  return static_cast<Family>(state_->params.index());
}

const FamilyParams& DistributionModel::params() const noexcept {
  return state_->params;
}

const Support& DistributionModel::support() const noexcept {
  return state_->support;
}

std::string DistributionModel::name() const { return describe(state_->params); }

double DistributionModel::cdf(double x) const {
  const Support& s = support();
  if (x <= s.lower) return 0.0;
  if (x >= s.upper) return 1.0;
  const Kernel k{x};
  return std::visit([&](const auto& p) { return k.cdf(p); }, state_->params);
}

double DistributionModel::sf(double x) const {
  const Support& s = support();
  if (x <= s.lower) return 1.0;
  if (x >= s.upper) return 0.0;
  const Kernel k{x};
  return std::visit([&](const auto& p) { return k.sf(p); }, state_->params);
}

double DistributionModel::pdf(double x) const {
  const Support& s = support();
  if (x < s.lower || x > s.upper) return 0.0;
  const Kernel k{x};
  return std::visit([&](const auto& p) { return k.pdf(p); }, state_->params);
}

double DistributionModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::QuantileOutOfRange, "quantile: p must lie in (0,1)");
  }
  const Inverse inv;
  const auto closed =
      std::visit([&](const auto& f) { return inv.quantile(f, p); }, state_->params);
  if (closed) return std::clamp(*closed, support().lower, support().upper);
  return bisect(support(), [&](double x) { return cdf(x) < p; });
}

double DistributionModel::upper_quantile(double q) const {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::QuantileOutOfRange,
                "upper_quantile: q must lie in (0,1)");
  }
  const Inverse inv;
  const auto closed = std::visit(
      [&](const auto& f) { return inv.upper_quantile(f, q); }, state_->params);
  if (closed) return std::clamp(*closed, support().lower, support().upper);
  return bisect(support(), [&](double x) { return sf(x) > q; });
}

double DistributionModel::hazard_rate(double t) const {
  const double s = sf(t);
  if (!(s > 0.0)) {
    throw Error(ErrorCode::DegenerateTail, name() + ": sf(t) = 0 in hazard rate");
  }
  return pdf(t) / s;
}

double DistributionModel::reversed_hazard(double t) const {
  const double F = cdf(t);
  if (!(F > 0.0)) {
    throw Error(ErrorCode::DegenerateHead,
                name() + ": cdf(t) = 0 in reversed hazard rate");
  }
  return pdf(t) / F;
}

MeasureValue DistributionModel::mean() const {
  if (tail_index() <= 1.0) {
    throw Error(ErrorCode::DivergentMean, name() + ": mean is infinite");
  }
  const Closed closed;
  if (const auto* a = std::get_if<Affine>(&state_->params)) {
    MeasureValue m = a->base.mean();
    m.value = a->shift + a->scale * m.value;
    m.abs_error_estimate *= a->scale;
    return m;
  }
  if (const auto* mix = std::get_if<Mixture>(&state_->params)) {
    MeasureValue out{0.0, Method::ClosedForm, 0.0};
    for (const auto& [w, d] : mix->components) {
      const MeasureValue m = d.mean();
      out.value += w * m.value;
      out.abs_error_estimate += w * m.abs_error_estimate;
      if (m.method == Method::Quadrature) out.method = Method::Quadrature;
    }
    return out;
  }
  const auto value =
      std::visit([&](const auto& p) { return closed.mean(p); }, state_->params);
  if (value) return {*value, Method::ClosedForm, 0.0};
  // E(X) = lower + integral of sf over the support.
  const Support& s = support();
  MeasureValue m =
      detail::integrate_residual(*this, s.lower, 1.0, [](double r) { return r; });
  m.value += s.lower;
  return m;
}

MeasureValue DistributionModel::mean_residual_life(double t) const {
  const Support& s = support();
  if (t < s.lower) {
    MeasureValue m = mean();
    m.value -= t;
    return m;
  }
  if (!(sf(t) > 0.0)) {
    throw Error(ErrorCode::DegenerateTail, name() + ": sf(t) = 0 in mrl");
  }
  if (tail_index() <= 1.0) {
    throw Error(ErrorCode::DivergentMean, name() + ": mean residual life is infinite");
  }
  if (const auto* a = std::get_if<Affine>(&state_->params)) {
    MeasureValue m = a->base.mean_residual_life((t - a->shift) / a->scale);
    m.value *= a->scale;
    m.abs_error_estimate *= a->scale;
    return m;
  }
  const Closed closed;
  const auto value =
      std::visit([&](const auto& p) { return closed.mrl(p, t); }, state_->params);
  if (value) return {*value, Method::ClosedForm, 0.0};
  return detail::integrate_residual(*this, t, 1.0, [](double r) { return r; });
}

MeasureValue DistributionModel::expected_inactivity_time(double t) const {
  const Support& s = support();
  if (!(cdf(t) > 0.0)) {
    throw Error(ErrorCode::DegenerateHead, name() + ": cdf(t) = 0 in eit");
  }
  if (t > s.upper) {
    MeasureValue m = mean();
    m.value = t - m.value;
    return m;
  }
  if (const auto* a = std::get_if<Affine>(&state_->params)) {
    MeasureValue m = a->base.expected_inactivity_time((t - a->shift) / a->scale);
    m.value *= a->scale;
    m.abs_error_estimate *= a->scale;
    return m;
  }
  std::optional<double> value;
  if (const auto* u = std::get_if<Uniform>(&state_->params)) {
    value = 0.5 * (t - u->a);
  } else if (const auto* p = std::get_if<Power>(&state_->params)) {
    value = t / (p->c + 1.0);
  } else if (const auto* e = std::get_if<Exponential>(&state_->params)) {
    value = t / cdf(t) - 1.0 / e->lambda;
  }
  if (value) return {*value, Method::ClosedForm, 0.0};
  return detail::integrate_past(*this, t, [](double r) { return r; });
}

double DistributionModel::tail_index() const {
  return std::visit(Tail{}, state_->params);
}

std::vector<double> DistributionModel::kinks() const {
  return std::visit(
      Overloaded{
          [](const Example32&) { return std::vector<double>{1.0}; },
          [](const Affine& p) {
            auto k = p.base.kinks();
            for (double& v : k) v = p.shift + p.scale * v;
            return k;
          },
          [](const MinOrder& p) { return p.base.kinks(); },
          [](const MaxOrder& p) { return p.base.kinks(); },
          [](const KthOrder& p) { return p.base.kinks(); },
          [](const Mixture& p) {
            std::vector<double> k;
            for (const auto& [w, d] : p.components) {
              for (double v : d.kinks()) k.push_back(v);
              k.push_back(d.support().lower);
              if (d.support().bounded()) k.push_back(d.support().upper);
            }
            return k;
          },
          [](const auto&) { return std::vector<double>{}; },
      },
      state_->params);
}

// --- factories ------------------------------------------------------------

DistributionModel uniform(double a, double b) {
  return DistributionModel(Uniform{a, b});
}
DistributionModel finite_range(double a, double b) {
  return DistributionModel(FiniteRange{a, b});
}
DistributionModel weibull(double lambda, double theta) {
  return DistributionModel(Weibull{lambda, theta});
}
DistributionModel folded_cramer(double theta) {
  return DistributionModel(FoldedCramer{theta});
}
DistributionModel pareto(double lambda, double theta) {
  return DistributionModel(Pareto{lambda, theta});
}
DistributionModel gpd(double theta, double lambda) {
  return DistributionModel(Gpd{theta, lambda});
}
DistributionModel power(double b, double c) {
  return DistributionModel(Power{b, c});
}
DistributionModel exponential(double lambda) {
  return DistributionModel(Exponential{lambda});
}
DistributionModel mixture_fig21() { return DistributionModel(MixtureFig21{}); }
DistributionModel example32() { return DistributionModel(Example32{}); }

DistributionModel affine_transform(const DistributionModel& d, double scale,
                                   double shift) {
  return DistributionModel(Affine{d, scale, shift});
}

DistributionModel mixture(
    std::vector<std::pair<double, DistributionModel>> components) {
  return DistributionModel(Mixture{std::move(components)});
}

DistributionModel tabulated(std::vector<double> x, std::vector<double> F) {
  return DistributionModel(Tabulated{std::move(x), std::move(F)});
}

}  // namespace extropy
