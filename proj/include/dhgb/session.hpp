#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dhgb/quotient.hpp"

namespace dhgb {

struct parse_error : std::runtime_error {
  int line, column;
  parse_error(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// A parsed session file: ring declaration, ordering, named polynomials.
/// The ring is stored plain; the homogenization variable (if any) is resolved
/// per command, so `asvar` can override the declaration.
struct Session {
  Ctx ctx;
  OrderingSpec ord;
  std::optional<std::size_t> homvar;
  std::vector<std::pair<std::string, Poly>> polys;
};

Session parse_session(std::istream& in);

struct CommandResult {
  std::string text;
  int exit_code = 0;  // 0 ok, 1 precondition failure, 2 parse error
};

/// Executes one command against a session. `args` holds the command and its
/// options, e.g. {"asvar", "t", "pipeline", "--degree-bound", "6"}.
CommandResult run_command(const Session& s, const std::vector<std::string>& args);

/// Parses the session from `in` and runs; converts exceptions to exit codes.
CommandResult run_session(std::istream& in, const std::vector<std::string>& args);

}  // namespace dhgb
