#pragma once

#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace pkv {

// Runs the selected verification suites for the configured model. Internal
// errors become fail reports; the function itself does not throw. Reports are
// deterministic for a fixed config and seed (timing fields aside).
std::vector<CheckReport> run_suites(const RunConfig& cfg);

}  // namespace pkv
