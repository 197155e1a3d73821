#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

namespace boostcraft::cli {

/// Seed from --seed, else BOOSTCRAFT_SEED, else 0. Throws ConfigError if the
/// variable is set but not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Entry point of the `boostcraft` tool. Returns the process exit code:
/// 0 on success, 1 on a library error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace boostcraft::cli
