/*
 * Copyright 2026 The logeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOGEO_TOOLS_CLI_HPP
#define LOGEO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace logeo::cli {

enum ExitCode : int { ok = 0, verdict_false = 1, usage = 2, guard_exceeded = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logeo::cli

#endif  // LOGEO_TOOLS_CLI_HPP
