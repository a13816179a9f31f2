#pragma once

#include <string>
#include <vector>

#include "qcif/types.hpp"

namespace qcif {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// Runs the full verification suite (one entry per criterion). The slow flag
// adds the 3-qutrit chain closure to criterion 8.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, bool slow);

// Least-squares slope of log(y) against log(x); both positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qcif
