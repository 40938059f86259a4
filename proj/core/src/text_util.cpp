// Copyright 2026 The symplectiq Authors
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

#include "text_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "symplectiq/error.hpp"

namespace symplectiq::text {

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream words{std::string(raw)};
        std::string word;
        Line line;
        line.number = number;
        while (words >> word) {
            if (line.head.empty()) {
                line.head = word;
                continue;
            }
            const auto eq = word.find('=');
            if (eq == std::string::npos) {
                line.positional.push_back(word);
                continue;
            }
            std::string key = word.substr(0, eq);
            if (key.empty()) fail(line, "empty key in '" + word + "'");
            if (!line.values.emplace(key, word.substr(eq + 1)).second) {
                fail(line, "duplicate key '" + key + "'");
            }
        }
        if (!line.head.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return out;
}

void fail(const Line &line, const std::string &reason) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) + ": " + reason);
}

const std::string &require(const Line &line, const std::string &key) {
    auto it = line.values.find(key);
    if (it == line.values.end()) fail(line, "'" + line.head + "' needs " + key + "=");
    return it->second;
}

bool has(const Line &line, const std::string &key) { return line.values.count(key) != 0; }

void allow_only(const Line &line, std::initializer_list<const char *> keys) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto &[k, v] : line.values) {
        (void)v;
        if (allowed.count(k) == 0) fail(line, "unknown key '" + k + "' for '" + line.head + "'");
    }
    if (!line.positional.empty()) fail(line, "unexpected token '" + line.positional.front() + "'");
}

void positional_count(const Line &line, std::size_t count) {
    if (line.positional.size() != count || !line.values.empty()) {
        fail(line, "'" + line.head + "' takes " + std::to_string(count) + " plain argument(s)");
    }
}

double to_double(const Line &line, const std::string &what, const std::string &value) {
    double v = 0.0;
    const char *first = value.data();
    const char *last = value.data() + value.size();
    if (!value.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        fail(line, "bad number for " + what + ": '" + value + "'");
    }
    return v;
}

std::uint64_t to_u64(const Line &line, const std::string &what, const std::string &value) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
        fail(line, "bad integer for " + what + ": '" + value + "'");
    }
    return v;
}

std::size_t to_size(const Line &line, const std::string &what, const std::string &value) {
    return static_cast<std::size_t>(to_u64(line, what, value));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace symplectiq::text
