#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvar/reporting/report.hpp"

namespace lvar::suites {

// mon, qco, translation, reductions, cfa, cfb-counterexample, duality-sandwich.
const std::vector<std::string>& names();

// Runs a named property suite. The result depends only on (name, trials,
// seed, tol). Unknown names raise ErrorKind::InvalidArgument.
report::SuiteSection run(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                         double tol = 1e-9);

}  // namespace lvar::suites
