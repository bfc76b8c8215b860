/*
   Copyright 2026 The knotfm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KNOTFM_TOOLS_CLI_HPP
#define KNOTFM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>

#include "knotfm/obstruction.hpp"

namespace knotfm::cli {

/// Exit codes shared by every command.
enum Exit : int {
  kOk = 0,            // obstructed, or the command succeeded
  kFailure = 1,       // verification mismatch, unreadable input, internal error
  kUsage = 2,         // bad arguments or configuration
  kInconclusive = 10  // no obstruction found
};

struct Config {
  u64 seed = kDefaultSeed;
  u64 max_a = kDefaultMaxA;
  unsigned jobs = 1;
  OracleLevel oracle = OracleLevel::CompositeOnly;
  u64 oracle_max_degree = 1024;
};

/// Reads the JSON file named by KNOTFM_CONFIG, if set. Keys: seed, max_a,
/// jobs, oracle ("off", "composite", "always"), oracle_max_degree. Numbers
/// may be JSON numbers or decimal strings. Throws std::invalid_argument.
Config load_config(const char* path);

/// Runs one command line. Everything the command prints goes to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotfm::cli

#endif  // KNOTFM_TOOLS_CLI_HPP
