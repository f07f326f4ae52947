#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ririg::cli {

/// Exit statuses shared by every command.
enum Exit : int {
    ok = 0,          ///< property holds / task succeeded
    fails = 1,       ///< property fails; the report carries a witness
    bad_input = 2,   ///< usage or input error
    undecided = 3,   ///< bound exhausted, nothing decided
};

/// Environment variable naming the default catalog for prove, entails and lddt.
inline constexpr const char* catalog_env = "RIRIG_CATALOG";

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ririg::cli
