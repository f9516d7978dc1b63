#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwf {

/*
  Runs one command line (args excludes the program name). Exit codes:
  0 success, 1 domain error, 2 usage error. With --json every command
  writes a single JSON document to out.
*/
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwf
