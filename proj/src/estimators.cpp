#include "extropy/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "extropy/error.hpp"

namespace extropy {
namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "estimator order n must be >= 1");
}

}  // namespace

SampleSet::SampleSet(std::vector<double> values,
                     std::optional<double> upper_bound)
    : values_(std::move(values)), upper_bound_(upper_bound) {
  if (values_.empty()) throw Error(ErrorCode::EmptySample, "sample is empty");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidSample,
                  "sample values must be finite and nonnegative");
    }
  }
  std::sort(values_.begin(), values_.end());
  if (upper_bound_ && !(*upper_bound_ >= values_.back())) {
    throw Error(ErrorCode::InvalidSample,
                "upper bound is below the sample maximum");
  }
}

double SampleSet::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double empirical_crex(const SampleSet& s, int n) {
  check_order(n);
  const auto& x = s.values();
  const double m = static_cast<double>(x.size());
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += (x[i] - prev) * std::pow((m - i) / m, 2 * n);
    prev = x[i];
  }
  return -0.5 * sum;
}

double empirical_cpex(const SampleSet& s, int n) {
  check_order(n);
  const auto& x = s.values();
  const double m = static_cast<double>(x.size());
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += (x[i] - prev) * std::pow(i / m, 2 * n);
    prev = x[i];
  }
  if (s.upper_bound()) sum += *s.upper_bound() - x.back();
  return -0.5 * sum;
}

double empirical_dcrex(const SampleSet& s, double t, int n) {
  check_order(n);
  const auto& x = s.values();
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::OutsideSupport, "age must be nonnegative");
  }
  if (t >= x.back()) {
    throw Error(ErrorCode::DegenerateTail,
                "empirical survival function vanishes at t");
  }
  const double m = static_cast<double>(x.size());
  // First index with x > t; sf_m(t) = (m - first) / m.
  const auto first = static_cast<std::size_t>(
      std::upper_bound(x.begin(), x.end(), t) - x.begin());
  const double alive = m - static_cast<double>(first);
  double sum = 0.0;
  double prev = t;
  for (std::size_t i = first; i < x.size(); ++i) {
    sum += (x[i] - prev) * std::pow((m - i) / alive, 2 * n);
    prev = x[i];
  }
  return -0.5 * sum;
}

std::vector<double> draw_samples(const DistributionModel& d, std::size_t m,
                                 std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(m);
  while (out.size() < m) {
    const double u = unit(gen);
    if (u <= 0.0) continue;
    out.push_back(d.quantile(u));
  }
  return out;
}

std::vector<double> parse_samples(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::InvalidSample,
                  "line " + std::to_string(lineno) + ": not a number: " + token);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_samples(buf.str());
}

}  // namespace extropy
