#pragma once

#include <string>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/json_io.hpp"

namespace hitwalk::verify {

struct CheckResult {
  std::string check;
  bool applicable = false;  // at least one instance exercised
  bool pass = true;
  int instances = 0;
  double max_residual = 0.0;
  std::string note;
};

const std::vector<std::string>& known_checks();

// Runs the named checks over the given graphs; `scheme` ignores the graph list
// and validates the bundled catalog instead.
std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, Graph>>& graphs,
                                    const std::vector<std::string>& checks);

// Validates a claimed quotient fixture {"graph", "center", "kind", "quotient"}
// against the recomputed coarsest stabilized quotient.
CheckResult check_quotient_claim(const Json& fixture);

Json to_json(const std::vector<CheckResult>& results);

}  // namespace hitwalk::verify
