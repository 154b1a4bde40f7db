/* Copyright (C) 2026 The hyperquad authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <exception>
#include <string>

namespace hq {

// Result of one front-end command: a human-readable report, the versioned JSON
// document (config echo plus result) and the process exit status.
struct RunOutput {
  std::string text;
  std::string json;
  int exit_code = 0;
};

// config_json: {"command": "...", ...flags}. Missing optional flags take their defaults,
// which are written back into the echoed config so a rerun reproduces the document.
RunOutput run_command(const std::string& config_json);

// Usage problems in a config (unknown command, missing or malformed flag).
bool is_usage_error(const std::exception& e);

}  // namespace hq
