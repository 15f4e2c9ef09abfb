#pragma once

#include <string>
#include <vector>

namespace longtube {

enum class Relation { at_most, at_least, equals };

struct BoundReport {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  // Positive when satisfied with room to spare.
  double margin = 0.0;
  std::string formula;
  Relation relation = Relation::at_most;
  double tolerance = 0.0;
};

// value <= bound + tol
BoundReport at_most(std::string name, double value, double bound, std::string formula,
                    double tol = 0.0);
// value >= bound - tol
BoundReport at_least(std::string name, double value, double bound, std::string formula,
                     double tol = 0.0);
// |value - bound| <= tol
BoundReport equals(std::string name, double value, double expected, double tol,
                   std::string formula);

bool all_satisfied(const std::vector<BoundReport>& reports);

}  // namespace longtube
