#pragma once

#include <string>
#include <vector>

namespace striptopo::testkit {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

/// Runs the command-line tool with `args` and captures both streams.
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace striptopo::testkit
