#include "extropy/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "extropy/error.hpp"

namespace extropy {
namespace {

using namespace family;

[[noreturn]] void schema(const std::string& msg) {
  throw Error(ErrorCode::Schema, msg);
}

void only_keys(const Json& obj, const std::set<std::string>& allowed,
               const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) schema(where + ": unknown key \"" + key + "\"");
  }
}

double number(const Json& obj, const std::string& key,
              const std::string& where) {
  if (!obj.contains(key)) schema(where + ": missing \"" + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_number()) schema(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

const Json& params_of(const Json& j, const std::string& fam) {
  static const Json empty = Json::object();
  if (!j.contains("params")) return empty;
  const Json& p = j.at("params");
  if (!p.is_object()) schema(fam + ": \"params\" must be an object");
  return p;
}

using Make2 = DistributionModel (*)(double, double);

DistributionModel two(const Json& j, const std::string& fam, const char* a,
                      const char* b, Make2 make) {
  const Json& p = params_of(j, fam);
  only_keys(p, {a, b}, fam);
  const double first = number(p, a, fam);
  const double second = number(p, b, fam);
  return make(first, second);
}

DistributionModel affine_spec(const Json& j) {
  // Accept both {"params": {base, scale, shift}} and top-level keys.
  const bool nested = j.contains("params");
  const Json& p = nested ? params_of(j, "affine") : j;
  if (nested) {
    only_keys(p, {"base", "scale", "shift"}, "affine");
  } else {
    only_keys(p, {"family", "base", "scale", "shift"}, "affine");
  }
  if (!p.contains("base")) schema("affine: missing \"base\"");
  const DistributionModel base = spec_from_json(p.at("base"));
  const double scale = number(p, "scale", "affine");
  const double shift = p.contains("shift") ? number(p, "shift", "affine") : 0.0;
  if (shift < 0.0) {
    throw Error(ErrorCode::ParamDomain, "affine: shift must be >= 0");
  }
  return affine_transform(base, scale, shift);
}

std::string format_sig(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

}  // namespace

DistributionModel spec_from_json(const Json& j) {
  if (!j.is_object()) schema("distribution spec must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) {
    schema("distribution spec needs a string \"family\"");
  }
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "affine") return affine_spec(j);
  only_keys(j, {"family", "params"}, fam);

  if (fam == "uniform") return two(j, fam, "a", "b", &uniform);
  if (fam == "finite_range") return two(j, fam, "a", "b", &finite_range);
  if (fam == "weibull") return two(j, fam, "lambda", "theta", &weibull);
  if (fam == "pareto") return two(j, fam, "lambda", "theta", &pareto);
  if (fam == "gpd") return two(j, fam, "theta", "lambda", &gpd);
  if (fam == "power") return two(j, fam, "b", "c", &power);
  if (fam == "folded_cramer") {
    const Json& p = params_of(j, fam);
    only_keys(p, {"theta"}, fam);
    return folded_cramer(number(p, "theta", fam));
  }
  if (fam == "exponential") {
    const Json& p = params_of(j, fam);
    only_keys(p, {"lambda"}, fam);
    return exponential(number(p, "lambda", fam));
  }
  if (fam == "mixture_fig21" || fam == "example32") {
    only_keys(params_of(j, fam), {}, fam);
    return fam == "example32" ? example32() : mixture_fig21();
  }
  schema("unknown family \"" + fam + "\"");
}

DistributionModel parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(j);
}

Json spec_to_json(const DistributionModel& d) {
  return std::visit(
      [&](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return {{"family", "uniform"}, {"params", {{"a", p.a}, {"b", p.b}}}};
        } else if constexpr (std::is_same_v<T, FiniteRange>) {
          return {{"family", "finite_range"},
                  {"params", {{"a", p.a}, {"b", p.b}}}};
        } else if constexpr (std::is_same_v<T, Weibull>) {
          return {{"family", "weibull"},
                  {"params", {{"lambda", p.lambda}, {"theta", p.theta}}}};
        } else if constexpr (std::is_same_v<T, FoldedCramer>) {
          return {{"family", "folded_cramer"}, {"params", {{"theta", p.theta}}}};
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return {{"family", "pareto"},
                  {"params", {{"lambda", p.lambda}, {"theta", p.theta}}}};
        } else if constexpr (std::is_same_v<T, Gpd>) {
          return {{"family", "gpd"},
                  {"params", {{"theta", p.theta}, {"lambda", p.lambda}}}};
        } else if constexpr (std::is_same_v<T, Power>) {
          return {{"family", "power"}, {"params", {{"b", p.b}, {"c", p.c}}}};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return {{"family", "exponential"}, {"params", {{"lambda", p.lambda}}}};
        } else if constexpr (std::is_same_v<T, MixtureFig21>) {
          return {{"family", "mixture_fig21"}, {"params", Json::object()}};
        } else if constexpr (std::is_same_v<T, Example32>) {
          return {{"family", "example32"}, {"params", Json::object()}};
        } else if constexpr (std::is_same_v<T, Affine>) {
          return {{"family", "affine"},
                  {"params",
                   {{"base", spec_to_json(p.base)},
                    {"scale", p.scale},
                    {"shift", p.shift}}}};
        } else {
          throw Error(ErrorCode::Schema,
                      d.name() + " has no JSON spec representation");
        }
      },
      d.params());
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig(x).c_str(), nullptr);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  return format_sig(x);
}

std::string curve_to_csv(const Curve& c) {
  std::string out = "t,value\n";
  for (const auto& p : c.points) {
    out += format_number(p.t);
    out += ',';
    out += format_number(p.value);
    out += '\n';
  }
  return out;
}

Curve curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Curve c;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "t,value") schema("curve CSV must start with \"t,value\"");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      schema("curve CSV line " + std::to_string(lineno) + ": expected t,value");
    }
    char* end = nullptr;
    const std::string ts = line.substr(0, comma);
    const std::string vs = line.substr(comma + 1);
    const double t = std::strtod(ts.c_str(), &end);
    if (ts.empty() || *end != '\0') {
      schema("curve CSV line " + std::to_string(lineno) + ": bad t");
    }
    const double v = std::strtod(vs.c_str(), &end);
    if (vs.empty() || *end != '\0') {
      schema("curve CSV line " + std::to_string(lineno) + ": bad value");
    }
    c.points.push_back({t, v});
  }
  if (!header) schema("curve CSV is empty");
  return c;
}

Json to_json(const MeasureValue& v) {
  return {{"value", num(v.value)},
          {"method", to_string(v.method)},
          {"abs_error_estimate", num(v.abs_error_estimate)}};
}

Json to_json(const CheckReport& r) {
  Json point = num(r.worst_point);
  if (r.worst_point2) point = Json::array({num(r.worst_point), num(*r.worst_point2)});
  Json j = {{"check_id", r.check_id},
            {"verdict", to_string(r.verdict)},
            {"worst_margin", num(r.worst_margin)},
            {"worst_point", point},
            {"points_tested", r.points_tested},
            {"degenerate_points", r.degenerate},
            {"tolerance", num(r.tolerance)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const CharacterizationResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.recovered_params) params[k] = num(v);
  Json j = {{"model", to_string(r.model)},
            {"c_hat", num(r.c_hat)},
            {"dispersion", num(r.dispersion)},
            {"tolerance", num(r.tolerance)},
            {"recovered_params", params},
            {"points_used", r.points_used}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace extropy
