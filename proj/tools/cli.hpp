#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmod/counter.hpp"

namespace xmod::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;    // axiom violation, replay error, invalid presentation
inline constexpr int kExitUsage = 2;     // bad arguments, unreadable or malformed input
inline constexpr int kExitTooLarge = 3;  // work cap or naive size cap

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string out;  // reports
  std::string err;  // diagnostics
};

struct CountFlags {
  CountMethod method = CountMethod::automatic;
  std::optional<long long> one_handles;
  CountOptions options;
  bool timing = true;
};

/// XMOD_WORK_CAP when set to a positive integer, kDefaultWorkCap otherwise.
std::uint64_t work_cap_from_env();

// Inputs are file paths, or `@name` for a shipped fixture movie or module.
// Counting inputs are presentations (first non-comment line `pres v1`) or
// movie scripts.

CommandOutcome cmd_validate(const std::string& module_input);
CommandOutcome cmd_count(const std::string& input, const std::string& module_input, const CountFlags& flags);
CommandOutcome cmd_invariant(const std::string& input, const std::string& module_input, const CountFlags& flags);
CommandOutcome cmd_compile(const std::string& movie_input);
/// `name` empty or "all" runs every fixture against every shipped module.
CommandOutcome cmd_examples(const std::string& name, const CountFlags& flags);
CommandOutcome cmd_selftest();

/// Parses `args` (without the program name) and dispatches.
CommandOutcome run_cli(const std::vector<std::string>& args);

}  // namespace xmod::cli
