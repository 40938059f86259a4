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

#include "symplectiq/gb_text.hpp"

#include <sstream>

#include "text_util.hpp"

namespace symplectiq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BitCondition condition_from(const text::Line &line) {
    try {
        return parse_condition(text::require(line, "cond"));
    } catch (const Error &e) {
        text::fail(line, e.detail());
    }
}

Sign sign_from(const text::Line &line) {
    if (!text::has(line, "sign")) return Sign::Plus;
    const auto &s = text::require(line, "sign");
    if (s == "+") return Sign::Plus;
    if (s == "-") return Sign::Minus;
    text::fail(line, "sign must be + or -");
}

}  // namespace

BitCondition parse_condition(std::string_view s) {
    BitCondition out;
    if (s == "-") return out;
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty condition (write cond=-)");
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        const std::string item(s.substr(pos, comma - pos));
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= item.size()) {
            throw Error(ErrorCode::ParseError, "condition clause '" + item + "' is not bit:value");
        }
        BitClause clause;
        try {
            std::size_t used = 0;
            clause.bit = std::stoul(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("bit");
            const std::string v = item.substr(colon + 1);
            if (v != "0" && v != "1") throw std::invalid_argument("value");
            clause.value = v == "1" ? 1 : 0;
        } catch (const std::logic_error &) {
            throw Error(ErrorCode::ParseError, "condition clause '" + item + "' is not bit:value");
        }
        out.clauses.push_back(clause);
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

std::string format_condition(const BitCondition &cond) {
    if (cond.empty()) return "-";
    std::string out;
    for (const auto &c : cond.clauses) {
        if (!out.empty()) out += ",";
        out += std::to_string(c.bit) + ":" + std::to_string(c.value);
    }
    return out;
}

GbCircuit parse_gb_circuit(std::string_view source) {
    const auto lines = text::tokenize(source);
    GbCircuit c;
    bool have_modes = false;
    for (const auto &line : lines) {
        using text::require;
        auto num = [&](const char *key) { return text::to_double(line, key, require(line, key)); };
        auto idx = [&](const char *key) { return text::to_size(line, key, require(line, key)); };
        if (line.head == "modes") {
            if (have_modes) text::fail(line, "repeated 'modes' line");
            text::positional_count(line, 1);
            c.modes = text::to_size(line, "modes", line.positional[0]);
            if (!is_power_of_two(c.modes)) text::fail(line, "mode count must be a power of two");
            have_modes = true;
            continue;
        }
        if (!have_modes) text::fail(line, "circuit must start with 'modes <M>'");
        if (line.head == "phase") {
            text::allow_only(line, {"m", "t"});
            c.gates.emplace_back(gb::Phase{idx("m"), num("t")});
        } else if (line.head == "bs") {
            text::allow_only(line, {"m", "mp", "t"});
            c.gates.emplace_back(gb::Beamsplitter{idx("m"), idx("mp"), num("t")});
        } else if (line.head == "sq") {
            text::allow_only(line, {"m", "t", "sign"});
            c.gates.emplace_back(gb::Squeeze{idx("m"), num("t"), sign_from(line)});
        } else if (line.head == "gphase") {
            text::allow_only(line, {"cond", "t"});
            c.gates.emplace_back(gb::GlobalPhase{condition_from(line), num("t")});
        } else if (line.head == "gbs") {
            text::allow_only(line, {"cond", "l", "t"});
            c.gates.emplace_back(gb::GlobalBeamsplitter{condition_from(line), idx("l"), num("t")});
        } else if (line.head == "gsq") {
            text::allow_only(line, {"cond", "t", "sign"});
            c.gates.emplace_back(gb::GlobalSqueeze{condition_from(line), num("t"), sign_from(line)});
        } else if (line.head == "disp") {
            text::allow_only(line, {"m", "dq", "dp"});
            c.gates.emplace_back(gb::Displacement{idx("m"), num("dq"), num("dp")});
        } else {
            text::fail(line, "unknown gate '" + line.head + "'");
        }
    }
    if (!have_modes) throw Error(ErrorCode::ParseError, "missing 'modes <M>' line");
    return c;
}

std::string serialize_gb_circuit(const GbCircuit &c) {
    using text::format_double;
    std::ostringstream os;
    os << "modes " << c.modes << "\n";
    auto sign = [](Sign s) { return s == Sign::Plus ? "+" : "-"; };
    for (const auto &g : c.gates) {
        std::visit(overloaded{
                       [&](const gb::Phase &x) { os << "phase m=" << x.m << " t=" << format_double(x.t); },
                       [&](const gb::Beamsplitter &x) {
                           os << "bs m=" << x.m << " mp=" << x.mp << " t=" << format_double(x.t);
                       },
                       [&](const gb::Squeeze &x) {
                           os << "sq m=" << x.m << " t=" << format_double(x.t) << " sign=" << sign(x.sign);
                       },
                       [&](const gb::GlobalPhase &x) {
                           os << "gphase cond=" << format_condition(x.cond) << " t=" << format_double(x.t);
                       },
                       [&](const gb::GlobalBeamsplitter &x) {
                           os << "gbs cond=" << format_condition(x.cond) << " l=" << x.l
                              << " t=" << format_double(x.t);
                       },
                       [&](const gb::GlobalSqueeze &x) {
                           os << "gsq cond=" << format_condition(x.cond) << " t=" << format_double(x.t)
                              << " sign=" << sign(x.sign);
                       },
                       [&](const gb::Displacement &x) {
                           os << "disp m=" << x.m << " dq=" << format_double(x.dq)
                              << " dp=" << format_double(x.dp);
                       },
                   },
                   g);
        os << "\n";
    }
    return os.str();
}

}  // namespace symplectiq
