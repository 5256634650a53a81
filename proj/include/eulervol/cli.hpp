#pragma once

#include <string>
#include <vector>

namespace eulervol::cli {

enum class Status { ok, error, cap_exceeded };

/* outcome of one dispatched command: `value` is the exact stdout payload
   (no trailing newline; empty means print nothing), `diagnostics` are
   stderr lines. a failed verification is still status ok — the verdict
   lives in the payload and in the exit code */
struct CommandResult {
  Status status = Status::ok;
  std::string value;
  std::vector<std::string> diagnostics;
  int exit_code = 0;  // 0 ok/match, 1 mismatch, 2 usage error, 3 cap exceeded
};

/* dispatch an argument vector (program name excluded); never throws */
CommandResult run(const std::vector<std::string>& args);

/* argv adapter around run(): prints value and diagnostics, returns the
   exit code */
int run_main(int argc, char** argv);

}  // namespace eulervol::cli
