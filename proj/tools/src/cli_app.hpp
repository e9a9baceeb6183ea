/**
 * Copyright 2026 The Chromaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CHROMAUG_TOOLS_CLI_APP_HPP_
#define CHROMAUG_TOOLS_CLI_APP_HPP_

namespace chromaug::cli {

/// Parses argv and executes one subcommand. Returns the process exit
/// code: 0 on success, 1 on runtime failure, 2 on usage or validation
/// errors. Set CHROMAUG_VERBOSE=1 for per-image issue details on stderr.
int run(int argc, const char* const* argv);

}  // namespace chromaug::cli

#endif  // CHROMAUG_TOOLS_CLI_APP_HPP_
