#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace houghton::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace houghton::cli
