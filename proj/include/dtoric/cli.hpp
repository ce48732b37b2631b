#pragma once

// Command-line front end: problem documents in JSON, command dispatch and
// canonical text or JSON reports.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dtoric::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kValidation = 2,
  kResource = 3,
};

struct Options {
  std::optional<std::string> degree;  // "m1,m2,..."
  std::optional<std::string> box;     // "lo:hi"
  std::optional<long> bound;
  std::optional<bool> strict_normality;
  bool json = false;
};

struct Outcome {
  int exit_code = kOk;
  std::string output;  // report on success, message on error
};

const std::vector<std::string>& command_names();

// Runs one command on the document text. Errors become exit codes 2 and 3
// with the message in `output`.
Outcome run_command(const std::string& command, const std::string& document, const Options& options);

// Full argument parsing; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dtoric::cli
