// Copyright 2026 The Authors.
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

#ifndef COVROUGH_CLI_HPP_
#define COVROUGH_CLI_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace covrough::cli {

// Exit codes: 0 success / positive verdict, 1 negative verdict of a
// predicate subcommand (with the verdict and witness printed), 2 usage or
// input errors (diagnostic on err). An input path of "-" reads from in.
int run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err);

// Same, for callers that already hold the arguments (argv[0] excluded).
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace covrough::cli

#endif  // COVROUGH_CLI_HPP_
