#pragma once

#include <ostream>

namespace moncum {

/// Runs the built-in invariant suite, printing one PASS/FAIL line per check
/// and a summary. Returns the number of failed checks.
int run_selftest(std::ostream& out);

}  // namespace moncum
