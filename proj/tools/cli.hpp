#pragma once

#include <ostream>
#include <span>
#include <string>

namespace colorsampler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The JSON document goes to
/// `out`, diagnostics and summaries to `err`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace colorsampler::cli
