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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sbovqa {

/// Flat key-value config file with [section] tables, # comments, and
/// `key = value` entries. Values may be bare tokens or double-quoted strings.
/// Keys are addressed as "section.key". Every entry remembers its source line
/// so validation errors can point at it.
class ConfigFile {
  public:
    static ConfigFile parse(const std::string &text,
                            const std::string &source_name = "<config>");
    static ConfigFile load(const std::string &path);

    bool has(const std::string &key) const;

    std::string get_string(const std::string &key) const;
    std::string get_string(const std::string &key,
                           const std::string &fallback) const;
    double get_double(const std::string &key) const;
    double get_double(const std::string &key, double fallback) const;
    long long get_int(const std::string &key) const;
    long long get_int(const std::string &key, long long fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;

    /// Line number of a key, 0 when absent. Used in validation messages.
    int line_of(const std::string &key) const;

    const std::string &source_name() const { return source_name_; }

    /// Keys never read by any getter; surfaced so typos fail loudly.
    std::vector<std::string> unused_keys() const;

  private:
    struct Entry {
        std::string value;
        int line = 0;
        mutable bool used = false;
    };

    [[noreturn]] void fail(const std::string &key,
                           const std::string &reason) const;
    const Entry &require(const std::string &key) const;

    std::string source_name_;
    std::map<std::string, Entry> entries_;
};

/// Collects validation problems, each pointing at the config line that caused
/// it, and throws one combined error listing all of them.
class ConfigErrors {
  public:
    explicit ConfigErrors(const ConfigFile &config) : config_(&config) {}

    void add(const std::string &key, const std::string &message);
    void add_global(const std::string &message);

    /// Throws std::runtime_error enumerating every recorded problem.
    void throw_if_any() const;

  private:
    const ConfigFile *config_;
    std::vector<std::string> messages_;
};

} // namespace sbovqa
