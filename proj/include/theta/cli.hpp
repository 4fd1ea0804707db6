#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/multiplicity.hpp"

namespace theta {

  // Exit codes of the command line tool.
  enum ExitCode : int {
    exit_ok           = 0,
    exit_usage        = 1,
    exit_disagreement = 2,
    exit_structural   = 3,
  };

  struct UsageError : Error {
    using Error::Error;
  };

  struct RunConfig {
    // mult, table, oracle or verify.
    std::string subcommand;
    // e6 or e8; for verify, restricts `verify group` to one case.
    std::optional<Case> which;
    // For verify: group or cartan.
    std::string check;
    std::vector<int> weight;
    int              max_entry = 2;
    // closed, averaging, direct or all.
    std::string method = "all";
    // json or csv (verify cartan also accepts text).
    std::string      format = "json";
    int              degree = 4;
    std::vector<int> label;
    unsigned         threads = 1;
  };

  //! Parse argv-style arguments (without the program name). Returns
  //! nullopt after printing help to out.
  std::optional<RunConfig> parse_args(std::vector<std::string> const& args,
                                      std::ostream&                   out);

  //! Execute one configuration, writing results to out and diagnostics to
  //! err. Returns an ExitCode.
  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  // parse_args then run, mapping every failure to its exit code.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace theta
