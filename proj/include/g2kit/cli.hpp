#pragma once

#include <g2kit/io.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace g2kit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kAllPassed = 0, kChecksFailed = 1, kBadInput = 2 };

// Reports behind the file-based commands. Each throws InputError if the
// bundle has a kind the command does not accept.
Report lie2_bundle_report(const Bundle& b);       // lie2 or crossed
Report algebroid_bundle_report(const Bundle& b);  // algebroid or poisson
Report action_bundle_report(const Bundle& b);     // action
Report derive_bundle_report(const Bundle& b);     // algebroid or poisson

/// Runs one g2kit command. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv);

}  // namespace g2kit
