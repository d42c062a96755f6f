#ifndef EXTROPY_SPEC_IO_HPP_
#define EXTROPY_SPEC_IO_HPP_

#include <string>

#include "json.hpp"

#include "extropy/analysis.hpp"
#include "extropy/characterize.hpp"
#include "extropy/distributions.hpp"
#include "extropy/measures.hpp"

namespace extropy {

using Json = nlohmann::ordered_json;

// {"family": "...", "params": {...}}.  Throws SchemaError for malformed
// documents, unknown families or keys and missing parameters, and
// ParamDomainError for values outside a family's domain.
DistributionModel parse_spec(const std::string& text);
DistributionModel spec_from_json(const Json& j);
Json spec_to_json(const DistributionModel& d);

// x rounded to 12 significant digits.
double round12(double x);
// 12 significant digits, shortest form.
std::string format_number(double x);

// "t,value" header, one row per point, LF line endings.
std::string curve_to_csv(const Curve& c);
Curve curve_from_csv(const std::string& text);

Json to_json(const MeasureValue& v);
Json to_json(const CheckReport& r);
Json to_json(const CharacterizationResult& r);

}  // namespace extropy

#endif  // EXTROPY_SPEC_IO_HPP_
