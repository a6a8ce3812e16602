#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boroczky::cli {

/// Runs one subcommand. Data goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 a check failed (verify), 2 usage, parse or
/// domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct PropertyOutcome {
  enum class Status { Pass, Skip, Fail };
  std::string name;
  Status status = Status::Pass;
  std::string detail;  ///< skip reason or failure witness
};

/// Invariant suite for one spec; stops after the first failure.
std::vector<PropertyOutcome> verify_spec(const std::string& spec_text);

}  // namespace boroczky::cli
