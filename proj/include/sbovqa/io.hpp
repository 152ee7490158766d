// Copyright 2026 The sbovqa authors
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

#include <filesystem>
#include <string>
#include <string_view>

namespace sbovqa {

/// Shortest decimal representation that parses back to the same double.
/// Locale-independent, used for every number we serialize.
std::string format_double(double value);

/// Parses a double written by format_double (or any standard decimal form).
/// Throws std::invalid_argument when the token is not fully consumed.
double parse_double(std::string_view token);

std::string read_file(const std::filesystem::path &path);

/// Writes to a temporary file in the target directory and renames it into
/// place, so a crash never leaves a partially written result file.
void atomic_write_file(const std::filesystem::path &path,
                       std::string_view content);

} // namespace sbovqa
