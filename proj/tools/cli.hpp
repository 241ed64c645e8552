#pragma once

#include <cstdint>
#include <iosfwd>

namespace dlv::cli {

/// Exit codes: 0 pass, 1 certification or run failure, 2 configuration or
/// schema error, 3 domain error.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_config = 2, exit_domain = 3 };

/// Runs one subcommand; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 42 unless the DLV_SEED environment variable holds an unsigned integer.
std::uint64_t default_seed();

} // namespace dlv::cli
