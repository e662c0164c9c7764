#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

namespace cactuswp::cli {

// Exit codes. kDisagreement is only ever returned when the census formula and
// the BFS oracle produce different polarity values.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 2;

// Test-only fault injection.
struct Hooks {
  // Added to every census-formula result before it is compared or printed.
  std::int64_t formula_bias = 0;
};

/// Runs the tool; args[0] is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace cactuswp::cli
