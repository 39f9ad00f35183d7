#pragma once

#include <set>
#include <string>
#include <vector>

#include "equinet/io.hpp"

namespace equinet {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Reference checks for the bundled networks. suite: "cycle", "octahedron",
// "chain" or "all".
std::vector<CheckResult> verify_reference(const std::string& suite);

// Individual groups, reused by the acceptance binary.
CheckResult check_cycle_character_table();
CheckResult check_cycle_spectrum();
CheckResult check_octahedron_spectrum();
CheckResult check_octahedron_eigenvectors();
CheckResult check_octahedron_degrees();
CheckResult check_burnside_oracle(const std::string& network);
CheckResult check_octahedron_windows();
CheckResult check_octahedron_ordering();
CheckResult check_chain_windows();
CheckResult check_chain_ordering();
CheckResult check_chain_orbit();
std::vector<CheckResult> check_invariant_suite();

// Names of primary types at lambda, optionally only the twisted ones.
std::set<std::string> primary_type_names(const NetworkModel& model, const ReductionChoice& red, double lambda,
                                         bool twisted_only);

// Text table, one line per check.
std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace equinet
