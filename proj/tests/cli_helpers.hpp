// Copyright 2026 ballfield developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BALLFIELD_TESTS_CLI_HELPERS_HPP
#define BALLFIELD_TESTS_CLI_HELPERS_HPP

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BALLFIELD_CLI_PATH
#error "BALLFIELD_CLI_PATH must point at the ballfield binary"
#endif

namespace cli {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

inline Result run(const std::string& args, bool raw_command = false) {
  const std::string outfile =
      "/tmp/ballfield_cli_out_" + std::to_string(::getpid()) + ".txt";
  const std::string cmd = (raw_command ? args : std::string(BALLFIELD_CLI_PATH) + " " + args) +
                          " > " + outfile + " 2>&1";
  const int status = std::system(cmd.c_str());
  Result r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(outfile);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(outfile.c_str());
  return r;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cli

#endif
