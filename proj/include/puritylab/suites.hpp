#pragma once

#include <string>
#include <vector>

#include "puritylab/harness.hpp"

namespace puritylab {

/// Names accepted by runSuite, in listing order.
const std::vector<std::string>& suiteNames();
/// One-line description for `list suites`.
std::string suiteSummary(const std::string& name);

/// Runs a named suite. Throws UnknownSuite for other names.
SuiteResult runSuite(const std::string& name, const RunSettings& settings);

}  // namespace puritylab
