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

#include "sbovqa/config.hpp"

#include <sstream>
#include <stdexcept>

#include "sbovqa/io.hpp"

namespace sbovqa {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string strip_comment(const std::string &line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            quoted = !quoted;
        } else if (line[i] == '#' && !quoted) {
            return line.substr(0, i);
        }
    }
    return line;
}

} // namespace

ConfigFile ConfigFile::parse(const std::string &text,
                             const std::string &source_name) {
    ConfigFile config;
    config.source_name_ = source_name;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw std::runtime_error(source_name + ":" +
                                         std::to_string(line_no) +
                                         ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(source_name + ":" +
                                     std::to_string(line_no) +
                                     ": expected `key = value`");
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error(source_name + ":" +
                                     std::to_string(line_no) +
                                     ": empty key or value");
        }
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        const std::string full_key =
            section.empty() ? key : section + "." + key;
        if (config.entries_.count(full_key)) {
            throw std::runtime_error(source_name + ":" +
                                     std::to_string(line_no) +
                                     ": duplicate key " + full_key);
        }
        config.entries_[full_key] = Entry{value, line_no, false};
    }
    return config;
}

ConfigFile ConfigFile::load(const std::string &path) {
    return parse(read_file(path), path);
}

bool ConfigFile::has(const std::string &key) const {
    return entries_.count(key) != 0;
}

void ConfigFile::fail(const std::string &key, const std::string &reason) const {
    const auto it = entries_.find(key);
    const std::string where =
        it == entries_.end()
            ? source_name_
            : source_name_ + ":" + std::to_string(it->second.line);
    throw std::runtime_error(where + ": " + key + " " + reason);
}

const ConfigFile::Entry &ConfigFile::require(const std::string &key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw std::runtime_error(source_name_ + ": missing required key " +
                                 key);
    }
    it->second.used = true;
    return it->second;
}

std::string ConfigFile::get_string(const std::string &key) const {
    return require(key).value;
}

std::string ConfigFile::get_string(const std::string &key,
                                   const std::string &fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double ConfigFile::get_double(const std::string &key) const {
    const auto &entry = require(key);
    try {
        return parse_double(entry.value);
    } catch (const std::exception &) {
        fail(key, "must be a number, got '" + entry.value + "'");
    }
}

double ConfigFile::get_double(const std::string &key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long long ConfigFile::get_int(const std::string &key) const {
    const auto &entry = require(key);
    try {
        std::size_t used = 0;
        const long long v = std::stoll(entry.value, &used);
        if (used != entry.value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        fail(key, "must be an integer, got '" + entry.value + "'");
    }
}

long long ConfigFile::get_int(const std::string &key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool ConfigFile::get_bool(const std::string &key, bool fallback) const {
    if (!has(key)) {
        return fallback;
    }
    const auto &entry = require(key);
    if (entry.value == "true") {
        return true;
    }
    if (entry.value == "false") {
        return false;
    }
    fail(key, "must be true or false, got '" + entry.value + "'");
}

int ConfigFile::line_of(const std::string &key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
}

std::vector<std::string> ConfigFile::unused_keys() const {
    std::vector<std::string> keys;
    for (const auto &[key, entry] : entries_) {
        if (!entry.used) {
            keys.push_back(key);
        }
    }
    return keys;
}

void ConfigErrors::add(const std::string &key, const std::string &message) {
    const int line = config_->line_of(key);
    std::string where = config_->source_name();
    if (line > 0) {
        where += ":" + std::to_string(line);
    }
    messages_.push_back(where + ": " + key + " " + message);
}

void ConfigErrors::add_global(const std::string &message) {
    messages_.push_back(config_->source_name() + ": " + message);
}

void ConfigErrors::throw_if_any() const {
    if (messages_.empty()) {
        return;
    }
    std::string combined = "invalid configuration:";
    for (const auto &m : messages_) {
        combined += "\n  " + m;
    }
    throw std::runtime_error(combined);
}

} // namespace sbovqa
