#include "extropy/orderstats.hpp"

#include <charconv>

#include "extropy/error.hpp"

namespace extropy {

void OrderSpec::validate() const {
  if (n < 1 || k < 1 || k > n || n > 60) {
    throw Error(ErrorCode::InvalidOrder,
                "order spec " + std::to_string(k) + ":" + std::to_string(n) +
                    " violates 1 <= k <= n <= 60");
  }
}

OrderSpec OrderSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  OrderSpec spec{0, 0};
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidOrder, "order spec must look like k:n");
  }
  const char* first = text.data();
  const char* mid = first + colon;
  const char* last = first + text.size();
  auto r1 = std::from_chars(first, mid, spec.k);
  auto r2 = std::from_chars(mid + 1, last, spec.n);
  if (r1.ec != std::errc{} || r1.ptr != mid || r2.ec != std::errc{} ||
      r2.ptr != last) {
    throw Error(ErrorCode::InvalidOrder, "order spec must look like k:n");
  }
  spec.validate();
  return spec;
}

DistributionModel min_order(const DistributionModel& d, int n) {
  return DistributionModel(family::MinOrder{d, n});
}

DistributionModel max_order(const DistributionModel& d, int n) {
  return DistributionModel(family::MaxOrder{d, n});
}

DistributionModel kth_order(const DistributionModel& d, const OrderSpec& spec) {
  spec.validate();
  if (spec.k == 1) return min_order(d, spec.n);
  if (spec.k == spec.n) return max_order(d, spec.n);
  return DistributionModel(family::KthOrder{d, spec.k, spec.n});
}

double kth_order_sf(const DistributionModel& d, const OrderSpec& spec, double x) {
  spec.validate();
  return DistributionModel(family::KthOrder{d, spec.k, spec.n}).sf(x);
}

}  // namespace extropy
