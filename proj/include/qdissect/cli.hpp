#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdissect {

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
///
/// Exit codes: 0 pass or certified, 1 refuted, 2 usage or parse error,
/// 3 prover inapplicable.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qdissect
