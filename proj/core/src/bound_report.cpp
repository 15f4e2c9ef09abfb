#include "longtube/bound_report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace longtube {

BoundReport at_most(std::string name, double value, double bound, std::string formula,
                    double tol) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.bound = bound;
  r.margin = bound - value;
  r.satisfied = std::isfinite(value) && value <= bound + tol;
  r.formula = std::move(formula);
  r.relation = Relation::at_most;
  r.tolerance = tol;
  return r;
}

BoundReport at_least(std::string name, double value, double bound, std::string formula,
                     double tol) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.bound = bound;
  r.margin = value - bound;
  r.satisfied = std::isfinite(value) && value >= bound - tol;
  r.formula = std::move(formula);
  r.relation = Relation::at_least;
  r.tolerance = tol;
  return r;
}

BoundReport equals(std::string name, double value, double expected, double tol,
                   std::string formula) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.bound = expected;
  r.margin = tol - std::abs(value - expected);
  r.satisfied = std::isfinite(value) && std::abs(value - expected) <= tol;
  r.formula = std::move(formula);
  r.relation = Relation::equals;
  r.tolerance = tol;
  return r;
}

bool all_satisfied(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.satisfied; });
}

}  // namespace longtube
