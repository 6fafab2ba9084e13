#ifndef DERLIE_COMMANDS_HPP
#define DERLIE_COMMANDS_HPP

#include <optional>
#include <string>

#include "derlie/dsl.hpp"

namespace derlie {

/// One CLI invocation, already flag-parsed.
struct Invocation {
  std::string command;
  std::string model;      // --model NAME
  std::string relative;   // --relative NAME
  std::string problem;    // --problem NAME
  std::optional<int> rangeLo, rangeHi;  // --range a..b
  std::optional<int> cutoff;            // --cutoff N
  bool json = false;                    // --json
  bool homology = false;                // cstar: build C* of H(Der) instead of Der
};

struct CommandResult {
  int exitCode = 0;  // 0 ok, 1 diagnostics, 2 precondition failure
  std::string text;  // human-readable report (also carries error text)
  std::string json;  // set when Invocation.json
};

/// Dispatch one command against a parsed workspace. Precondition failures
/// (Error) are caught and reported with exit code 2; unknown commands and
/// missing names likewise surface in the result, never as exceptions.
CommandResult runCommand(const Workspace& ws, const Invocation& inv);

}  // namespace derlie

#endif
