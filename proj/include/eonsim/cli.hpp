#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eonsim {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitTopologyError = 2,
  kExitRuntimeError = 3,
};

// Entry point of the eonsim command line. args[0] is the program name.
//
//   eonsim run --config <path> [--out <path>] [--seed <n>] [--jobs <n>] [--audit]
//   eonsim trace --config <path> --out <path> [--seed <n>] [--load <i>]
//   eonsim validate --config <path>
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eonsim
