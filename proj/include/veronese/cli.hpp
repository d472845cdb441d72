// Copyright 2026 The veronese-hilbert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VERONESE_CLI_HPP
#define VERONESE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace veronese::cli {

// Dispatches one command-line invocation.  `args` excludes the program
// name.  All output goes to the given streams; nothing is printed until
// the computation finishes.
//
// Exit codes: 0 success (for `verify`: report overall true);
// 1 computation/validation error or verification mismatch;
// 2 argument-parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace veronese::cli

#endif  // VERONESE_CLI_HPP
