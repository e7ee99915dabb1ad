#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace braidloom::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceCap = 3 };

struct Command {
  std::string verb;  // weave comb move encode decode invariant verify-table enumerate
  std::optional<std::string> word;
  std::optional<int> strands;
  std::optional<std::string> type;
  std::optional<std::int64_t> code;
  std::optional<std::string> kappa;
  std::string kind = "I";  // move kind: I, II+, II-
  int sign = 1;
  std::optional<std::string> row;
  int max_len = 6;
  unsigned jobs = 1;
  bool records = false;  // --format records: one JSON object per line
  bool minimality = false;
  std::optional<std::size_t> max_word;
};

struct Parsed {
  std::optional<Command> command;  // empty when parsing stopped (help or usage error)
  int exit_code = kOk;
  std::string message;  // help text or diagnostic
};

/// Environment defaults (BRAIDLOOM_JOBS, BRAIDLOOM_MAX_WORD) apply before flags.
Parsed parse_args(int argc, const char* const* argv);

/// Runs one command; returns the exit status.
int execute(const Command& c, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidloom::cli
