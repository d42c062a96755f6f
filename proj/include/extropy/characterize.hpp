#ifndef EXTROPY_CHARACTERIZE_HPP_
#define EXTROPY_CHARACTERIZE_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "extropy/analysis.hpp"
#include "extropy/distributions.hpp"
#include "extropy/measures.hpp"

namespace extropy {

enum class Model { Exponential, ParetoII, PowerGPD, PowerBounded, NotConstant };
std::string to_string(Model m);

struct CharacterizationResult {
  Model model = Model::NotConstant;
  double c_hat = 0.0;       // fitted ratio or slope
  double dispersion = 0.0;  // max deviation from constancy
  double tolerance = 0.0;   // constancy gate that was applied
  std::map<std::string, double> recovered_params;
  int points_used = 0;
  std::string note;
};

// Strictly increasing positive orders n_j.
struct CheckSchedule {
  std::vector<int> orders;

  CheckSchedule();  // 1..12
  explicit CheckSchedule(std::vector<int> orders);
};

// Constancy gate max(1e-6, 1e-4 |median|).
double constancy_tolerance(double median);

// Ratio DCRExMin(n,t) / mrl(t) over the grid.  A constant ratio -c
// identifies the GPD with c = 1 / (2 (2n (1 + lambda) - lambda)):
// c == 1/(4n) exponential, c < 1/(4n) Pareto II, 1/(4n) < c < 1/2 power.
CharacterizationResult gpd_ratio_test(const DistributionModel& d, int n,
                                      std::span<const double> grid);

// Least-squares line through a DCRExMin curve; a straight line identifies
// the GPD and its (theta, lambda).
CharacterizationResult gpd_slope_test(const Curve& curve, int n);

// Ratio DCPExMax(n,t) / eit(t); constant k identifies the power law with
// c = -(1 + 2k) / (1 + 4kn).
CharacterizationResult power_ratio_test(const DistributionModel& d, int n,
                                        std::span<const double> grid);

enum class EqualityMode { Location, Scale, LocationScale };
std::string to_string(EqualityMode m);

// Compares, over the schedule, CRExMin(n) (Location), CRExMin(n) / E X_{1:n}
// (Scale) or CPExMax(n) / CPEx (LocationScale).  Agreement on a finite
// schedule is evidence, not proof.
CheckReport family_equality_check(const DistributionModel& d1,
                                  const DistributionModel& d2,
                                  const CheckSchedule& schedule,
                                  EqualityMode mode,
                                  const CheckOptions& opts = {});

}  // namespace extropy

#endif  // EXTROPY_CHARACTERIZE_HPP_
