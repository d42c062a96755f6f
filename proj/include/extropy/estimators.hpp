#ifndef EXTROPY_ESTIMATORS_HPP_
#define EXTROPY_ESTIMATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extropy/distributions.hpp"

namespace extropy {

// Sorted iid sample of nonnegative lifetimes.
class SampleSet {
 public:
  // Throws EmptySample for no values, InvalidSample for negative or
  // non-finite entries or an upper bound below the sample maximum.
  explicit SampleSet(std::vector<double> values,
                     std::optional<double> upper_bound = std::nullopt);

  const std::vector<double>& values() const noexcept { return values_; }
  std::optional<double> upper_bound() const noexcept { return upper_bound_; }
  std::size_t size() const noexcept { return values_.size(); }
  double mean() const;

 private:
  std::vector<double> values_;
  std::optional<double> upper_bound_;
};

// -1/2 int_0^{x_(m)} sf_m(x)^{2n} dx for the empirical sf.
double empirical_crex(const SampleSet& s, int n = 1);

// -1/2 int_0^B F_m(x)^{2n} dx, B = upper bound if known, else x_(m).
double empirical_cpex(const SampleSet& s, int n = 1);

// -1/2 int_t^{x_(m)} (sf_m(x) / sf_m(t))^{2n} dx.  Throws DegenerateTail
// when t >= x_(m).
double empirical_dcrex(const SampleSet& s, double t, int n = 1);

// m inverse-cdf draws from d using a 64-bit Mersenne twister seeded by `seed`.
std::vector<double> draw_samples(const DistributionModel& d, std::size_t m,
                                 std::uint64_t seed);

// One value per line; blank lines and '#' comments are skipped.
std::vector<double> parse_samples(const std::string& text);
std::vector<double> read_samples(const std::string& path);

}  // namespace extropy

#endif  // EXTROPY_ESTIMATORS_HPP_
