#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcm {

// Runs one CLI invocation. Exit codes: 0 success, 1 input error, 2 scale
// guardrail refusal, 3 verification mismatch.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcm
