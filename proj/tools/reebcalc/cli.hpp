#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reeb/oracle.hpp"

namespace reeb::cli {

// Exit codes: feasible/verified, infeasible/failed, input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

enum class Subcommand { Check, Plan, Apply, Verify, FromFunction, Search };

struct Command {
  Subcommand subcommand = Subcommand::Check;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::string criterion = "auto";  // check
  std::string strategy = "auto";   // plan
  std::optional<int> n;            // from-function
  std::optional<int> find_min_n;   // from-function
  SearchBounds bounds;             // search
};

struct ParseOutcome {
  std::optional<Command> command;  // empty when parsing ended the run
  int exit_code = kExitOk;
};

// Usage errors print to `err` and yield exit code 2; --help prints to `out`
// and yields 0.
ParseOutcome parse_and_validate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_and_validate followed by execute. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reeb::cli
