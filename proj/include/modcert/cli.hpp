#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "modcert/report.hpp"

namespace modcert {

/// Runs one CLI invocation (args exclude the program name) writing to the
/// given streams. Exit codes: 0 success, 1 analysis error, 2 usage error,
/// 3 certificate-vs-oracle violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 3 when an oracle verification ran and failed, else 0.
int exit_code_for_verification(const AnalysisReport& report);

void render_text_report(const AnalysisReport& report, std::ostream& out);

}  // namespace modcert
