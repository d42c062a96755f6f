#ifndef EXTROPY_DISTRIBUTIONS_HPP_
#define EXTROPY_DISTRIBUTIONS_HPP_

#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "extropy/value.hpp"

namespace extropy {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Closed support interval of a nonnegative lifetime; `upper` may be +inf.
struct Support {
  double lower = 0.0;
  double upper = kInfinity;

  bool bounded() const noexcept { return upper < kInfinity; }
  bool contains(double x) const noexcept { return x >= lower && x <= upper; }
  bool interior(double x) const noexcept { return x > lower && x < upper; }
};

namespace detail {
struct ModelState;
}

namespace family {
struct Uniform;
struct FiniteRange;
struct Weibull;
struct FoldedCramer;
struct Pareto;
struct Gpd;
struct Power;
struct Exponential;
struct MixtureFig21;
struct Example32;
struct Affine;
struct MinOrder;
struct MaxOrder;
struct KthOrder;
struct Mixture;
struct Tabulated;
}  // namespace family

using FamilyParams =
    std::variant<family::Uniform, family::FiniteRange, family::Weibull,
                 family::FoldedCramer, family::Pareto, family::Gpd,
                 family::Power, family::Exponential, family::MixtureFig21,
                 family::Example32, family::Affine, family::MinOrder,
                 family::MaxOrder, family::KthOrder, family::Mixture,
                 family::Tabulated>;

// Same order as the FamilyParams alternatives.
enum class Family {
  Uniform,
  FiniteRange,
  Weibull,
  FoldedCramer,
  Pareto,
  Gpd,
  Power,
  Exponential,
  MixtureFig21,
  Example32,
  Affine,
  MinOrder,
  MaxOrder,
  KthOrder,
  Mixture,
  Tabulated,
};

// Immutable parametric lifetime distribution.  Copies share state; every
// accessor is a pure function, so instances may be used from any thread.
//
// cdf/sf clamp outside the support (0 below, 1 above for cdf); pdf is zero
// outside the support.  Quantiles without a closed form are found by
// bracketed bisection.
class DistributionModel {
 public:
  // Validates the parameters; throws Error(ParamDomain | InvalidScale |
  // InvalidOrder | BadWeights) on violation.
  explicit DistributionModel(FamilyParams params);

  Family family() const noexcept;
  const FamilyParams& params() const noexcept;
  const Support& support() const noexcept;
  std::string name() const;

  double cdf(double x) const;
  double sf(double x) const;
  double pdf(double x) const;

  // Inverse cdf for p in (0,1); throws QuantileOutOfRange otherwise.
  double quantile(double p) const;
  // Inverse survival function, i.e. quantile(1 - q) without the
  // cancellation for small q.
  double upper_quantile(double q) const;

  // f/sf; throws DegenerateTail when sf(t) == 0.
  double hazard_rate(double t) const;
  // f/F; throws DegenerateHead when cdf(t) == 0.
  double reversed_hazard(double t) const;

  MeasureValue mean() const;
  // E(X - t | X > t).
  MeasureValue mean_residual_life(double t) const;
  // E(t - X | X <= t).
  MeasureValue expected_inactivity_time(double t) const;

  // Exponent alpha of a power-law tail sf(x) ~ x^-alpha; +inf for bounded or
  // lighter-than-polynomial tails.  Decides integrability of sf^p.
  double tail_index() const;

  // Interior points where the density is not smooth.
  std::vector<double> kinks() const;

 private:
  std::shared_ptr<const detail::ModelState> state_;
};

namespace family {
struct Uniform {
  double a = 0.0, b = 1.0;
};
// sf(x) = (1 - a x)^b on (0, 1/a).
struct FiniteRange {
  double a = 1.0, b = 1.0;
};
// sf(x) = exp(-lambda x^theta).
struct Weibull {
  double lambda = 1.0, theta = 1.0;
};
// sf(x) = 1 / (1 + theta x).
struct FoldedCramer {
  double theta = 1.0;
};
// sf(x) = (lambda / (x + lambda))^theta, theta > 1.
struct Pareto {
  double lambda = 1.0, theta = 2.0;
};
// sf(x) = (theta / (lambda x + theta))^(1/lambda + 1), lambda > -1.
// lambda == 0 is the exponential limit with mean theta.
struct Gpd {
  double theta = 1.0, lambda = 0.0;
};
// cdf(x) = (x / b)^c on [0, b].
struct Power {
  double b = 1.0, c = 1.0;
};
struct Exponential {
  double lambda = 1.0;
};
// sf(x) = 1 - (1 - e^-x)(1 - e^-2x).
struct MixtureFig21 {};
// Piecewise cdf exp(-1/2 - 1/x) on (0,1], exp(-2 + x^2/2) on (1,2].
struct Example32 {};
// Y = scale * X + shift.
struct Affine {
  DistributionModel base;
  double scale = 1.0, shift = 0.0;
};
struct MinOrder {
  DistributionModel base;
  int n = 1;
};
struct MaxOrder {
  DistributionModel base;
  int n = 1;
};
struct KthOrder {
  DistributionModel base;
  int k = 1, n = 1;
};
struct Mixture {
  std::vector<std::pair<double, DistributionModel>> components;
};
// Piecewise-linear cdf through (x[i], F[i]); F.front() == 0, F.back() == 1.
struct Tabulated {
  std::vector<double> x, F;
};
}  // namespace family

DistributionModel uniform(double a, double b);
DistributionModel finite_range(double a, double b);
DistributionModel weibull(double lambda, double theta);
DistributionModel folded_cramer(double theta);
DistributionModel pareto(double lambda, double theta);
DistributionModel gpd(double theta, double lambda);
DistributionModel power(double b, double c);
DistributionModel exponential(double lambda);
DistributionModel mixture_fig21();
DistributionModel example32();

// cdf_Y(x) = cdf_X((x - shift) / scale).  Throws InvalidScale for scale <= 0.
DistributionModel affine_transform(const DistributionModel& d, double scale,
                                   double shift);

// Finite mixture; weights must be positive and sum to one.
DistributionModel mixture(
    std::vector<std::pair<double, DistributionModel>> components);

DistributionModel tabulated(std::vector<double> x, std::vector<double> F);

}  // namespace extropy

#endif  // EXTROPY_DISTRIBUTIONS_HPP_
