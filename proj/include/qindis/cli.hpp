// Copyright 2026 The qindis authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qindis/json_io.hpp"

namespace qindis {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. Arguments exclude the program name. Returns the
/// process exit code: 0 success, 2 validation/usage errors (with a JSON
/// error object on stdout), 1 internal errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

/// Renders a keyed numeric table payload ({"columns": [...], "rows": [...]})
/// as CSV with a header row, 17-significant-digit numbers and LF endings.
/// Throws not_tabular for other payload shapes.
std::string emit_plot_table(const Json& payload);

}  // namespace qindis
