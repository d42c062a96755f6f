#ifndef EXTROPY_VALUE_HPP_
#define EXTROPY_VALUE_HPP_

#include <string_view>

namespace extropy {

enum class Method { ClosedForm, Quadrature };

constexpr std::string_view to_string(Method m) noexcept {
  return m == Method::ClosedForm ? "closed_form" : "quadrature";
}

// A scalar functional together with how it was obtained.
struct MeasureValue {
  double value = 0.0;
  Method method = Method::ClosedForm;
  double abs_error_estimate = 0.0;
};

}  // namespace extropy

#endif  // EXTROPY_VALUE_HPP_
