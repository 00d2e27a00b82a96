// The `oi` command line: element algebra, structure reports and checks.

#ifndef OI_CLI_HPP_
#define OI_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace oi::cli {

  enum ExitCode : int {
    exit_pass  = 0,
    exit_fail  = 1,
    exit_usage = 2,
    exit_cap   = 3,
  };

  //! Runs one invocation. `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace oi::cli

#endif  // OI_CLI_HPP_
