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

#pragma once

// Shared helpers for the line-oriented `head key=value ...` text formats.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symplectiq::text {

struct Line {
    std::size_t number = 0;
    std::string head;
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
};

/// Splits `text` into lines, dropping `#` comments and blank lines.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void fail(const Line &line, const std::string &reason);

const std::string &require(const Line &line, const std::string &key);
bool has(const Line &line, const std::string &key);
void allow_only(const Line &line, std::initializer_list<const char *> keys);
void positional_count(const Line &line, std::size_t count);

double to_double(const Line &line, const std::string &what, const std::string &value);
std::size_t to_size(const Line &line, const std::string &what, const std::string &value);
std::uint64_t to_u64(const Line &line, const std::string &what, const std::string &value);

/// 17 significant digits, enough for an exact round trip.
std::string format_double(double v);

}  // namespace symplectiq::text
