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

#include "symplectiq/qubit_circuit.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "symplectiq/gb_text.hpp"
#include "text_util.hpp"

namespace symplectiq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_controls(const std::vector<Control> &cs) {
    if (cs.empty()) return "-";
    std::string out;
    for (const auto &c : cs) {
        if (!out.empty()) out += ",";
        out += std::to_string(c.qubit) + ":" + std::to_string(c.value);
    }
    return out;
}

std::vector<Control> parse_controls(const text::Line &line, const std::string &key) {
    BitCondition cond;
    try {
        cond = parse_condition(text::require(line, key));
    } catch (const Error &e) {
        text::fail(line, e.detail());
    }
    std::vector<Control> out;
    for (const auto &c : cond.clauses) out.push_back({c.bit, c.value});
    return out;
}

void fail_gate(std::size_t index, ErrorCode code, const std::string &reason) {
    throw Error(code, "qubit gate " + std::to_string(index) + ": " + reason);
}

}  // namespace

std::array<double, 4> qg::AnsatzPrep::amplitudes() const {
    return {std::sqrt(weights[0]), std::sqrt(weights[1]), std::sqrt(weights[2]), std::sqrt(weights[3])};
}

std::vector<std::size_t> QubitCircuit::postselect_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (std::holds_alternative<qg::Postselect>(gates[i])) out.push_back(i);
    }
    return out;
}

const char *qubit_gate_name(const QubitGate &g) {
    static constexpr const char *kNames[] = {"ry",     "x",    "mcry",       "mcx",    "selz",
                                             "selref", "prep", "postselect", "sqexact"};
    if (const auto *p = std::get_if<qg::AnsatzPrep>(&g); p != nullptr && p->inverse) return "unprep";
    return kNames[g.index()];
}

std::vector<std::size_t> gate_qubits(const QubitGate &g, std::size_t n) {
    std::vector<std::size_t> out;
    auto add_controls = [&](const std::vector<Control> &cs) {
        for (const auto &c : cs) out.push_back(c.qubit);
    };
    std::visit(overloaded{
                   [&](const qg::Ry &x) { out.push_back(x.target); },
                   [&](const qg::X &x) { out.push_back(x.target); },
                   [&](const qg::MultiControlledRy &x) {
                       add_controls(x.controls);
                       out.push_back(x.target);
                   },
                   [&](const qg::MultiControlledX &x) {
                       add_controls(x.controls);
                       out.push_back(x.target);
                   },
                   [&](const qg::SelectZ &x) {
                       add_controls(x.controls);
                       out.push_back(x.target);
                   },
                   [&](const qg::SelectReflect &x) {
                       add_controls(x.controls);
                       add_controls(x.pattern);
                   },
                   [&](const qg::AnsatzPrep &) {
                       out.push_back(n + 1);
                       out.push_back(n + 2);
                   },
                   [&](const qg::Postselect &) {
                       out.push_back(n + 1);
                       out.push_back(n + 2);
                   },
                   [&](const qg::ExactSqueeze &x) {
                       out.push_back(0);
                       for (const auto &c : x.cond.clauses) out.push_back(c.bit);
                   },
               },
               g);
    return out;
}

void validate_qubit_circuit(const QubitCircuit &qc) {
    const std::size_t n = qc.register_qubits;
    const std::size_t total = qc.total_qubits();
    bool in_block = false;
    for (std::size_t i = 0; i < qc.gates.size(); ++i) {
        const QubitGate &g = qc.gates[i];
        const auto qubits = gate_qubits(g, n);
        std::set<std::size_t> seen;
        bool touches_ancilla = false;
        for (std::size_t q : qubits) {
            if (q >= total) {
                fail_gate(i, ErrorCode::QubitOutOfRange,
                          "qubit " + std::to_string(q) + " outside 0.." + std::to_string(total - 1));
            }
            if (!seen.insert(q).second) {
                fail_gate(i, ErrorCode::InvalidArgument, "qubit " + std::to_string(q) + " used twice");
            }
            touches_ancilla = touches_ancilla || q > n;
        }
        auto check_values = [&](const std::vector<Control> &cs) {
            for (const auto &c : cs) {
                if (c.value != 0 && c.value != 1) fail_gate(i, ErrorCode::InvalidArgument, "control value must be 0 or 1");
            }
        };
        std::visit(overloaded{
                       [&](const qg::Ry &x) {
                           if (!std::isfinite(x.theta)) fail_gate(i, ErrorCode::InvalidArgument, "theta not finite");
                       },
                       [&](const qg::MultiControlledRy &x) {
                           check_values(x.controls);
                           if (!std::isfinite(x.theta)) fail_gate(i, ErrorCode::InvalidArgument, "theta not finite");
                       },
                       [&](const qg::MultiControlledX &x) { check_values(x.controls); },
                       [&](const qg::SelectZ &x) { check_values(x.controls); },
                       [&](const qg::SelectReflect &x) {
                           check_values(x.controls);
                           check_values(x.pattern);
                       },
                       [&](const qg::AnsatzPrep &x) {
                           double sum = 0.0;
                           for (double w : x.weights) {
                               if (!(w >= 0.0) || !std::isfinite(w)) {
                                   fail_gate(i, ErrorCode::InvalidArgument, "ansatz weights must be nonnegative");
                               }
                               sum += w;
                           }
                           if (std::abs(sum - 1.0) > 1e-12) {
                               fail_gate(i, ErrorCode::InvalidArgument, "ansatz weights must sum to 1");
                           }
                           if (x.inverse != in_block) {
                               fail_gate(i, ErrorCode::InvalidArgument,
                                         x.inverse ? "unprep without a matching prep" : "prep inside an open block");
                           }
                           in_block = !x.inverse || in_block;
                       },
                       [&](const qg::Postselect &x) {
                           if (!(x.gamma > 0.0) || !std::isfinite(x.gamma)) {
                               fail_gate(i, ErrorCode::InvalidArgument, "gamma must be positive");
                           }
                           if (!in_block) fail_gate(i, ErrorCode::InvalidArgument, "postselect outside a block");
                           in_block = false;
                       },
                       [&](const qg::ExactSqueeze &x) {
                           if (!std::isfinite(x.t)) fail_gate(i, ErrorCode::InvalidArgument, "t not finite");
                           for (const auto &c : x.cond.clauses) {
                               if (c.bit < 1 || c.bit > n) {
                                   fail_gate(i, ErrorCode::QubitOutOfRange, "condition must use register qubits");
                               }
                           }
                       },
                       [&](const auto &) {},
                   },
                   g);
        const bool block_gate =
            std::holds_alternative<qg::AnsatzPrep>(g) || std::holds_alternative<qg::Postselect>(g);
        if (touches_ancilla && !block_gate && !in_block) {
            fail_gate(i, ErrorCode::InvalidArgument, "ancilla used outside a prep/postselect block");
        }
    }
    if (in_block) throw Error(ErrorCode::InvalidArgument, "qubit circuit ends inside an LCU block");
}

std::string serialize_qubit_circuit(const QubitCircuit &qc) {
    using text::format_double;
    std::ostringstream os;
    os << "qubits n=" << qc.register_qubits << " ancillas=" << (qc.ancillas ? 2 : 0) << "\n";
    for (const auto &g : qc.gates) {
        std::visit(overloaded{
                       [&](const qg::Ry &x) { os << "ry q=" << x.target << " theta=" << format_double(x.theta); },
                       [&](const qg::X &x) { os << "x q=" << x.target; },
                       [&](const qg::MultiControlledRy &x) {
                           os << "mcry ctrls=" << format_controls(x.controls) << " tgt=" << x.target
                              << " theta=" << format_double(x.theta);
                       },
                       [&](const qg::MultiControlledX &x) {
                           os << "mcx ctrls=" << format_controls(x.controls) << " tgt=" << x.target;
                       },
                       [&](const qg::SelectZ &x) {
                           os << "selz ctrls=" << format_controls(x.controls) << " tgt=" << x.target
                              << " neg=" << (x.negated ? 1 : 0);
                       },
                       [&](const qg::SelectReflect &x) {
                           os << "selref ctrls=" << format_controls(x.controls)
                              << " pattern=" << format_controls(x.pattern);
                       },
                       [&](const qg::AnsatzPrep &x) {
                           os << (x.inverse ? "unprep" : "prep") << " a=" << format_double(x.weights[0])
                              << " b=" << format_double(x.weights[1]) << " c=" << format_double(x.weights[2])
                              << " d=" << format_double(x.weights[3]);
                       },
                       [&](const qg::Postselect &x) {
                           os << "postselect anc=00 gamma=" << format_double(x.gamma);
                       },
                       [&](const qg::ExactSqueeze &x) {
                           os << "sqexact cond=" << format_condition(x.cond) << " t=" << format_double(x.t)
                              << " sign=" << (x.sign == Sign::Plus ? "+" : "-");
                       },
                   },
                   g);
        os << "\n";
    }
    return os.str();
}

QubitCircuit parse_qubit_circuit(std::string_view source) {
    const auto lines = text::tokenize(source);
    QubitCircuit qc;
    bool have_header = false;
    for (const auto &line : lines) {
        using text::require;
        auto num = [&](const char *key) { return text::to_double(line, key, require(line, key)); };
        auto idx = [&](const char *key) { return text::to_size(line, key, require(line, key)); };
        if (line.head == "qubits") {
            if (have_header) text::fail(line, "repeated 'qubits' line");
            text::allow_only(line, {"n", "ancillas"});
            qc.register_qubits = idx("n");
            const std::size_t anc = text::has(line, "ancillas") ? idx("ancillas") : 0;
            if (anc != 0 && anc != 2) text::fail(line, "ancillas must be 0 or 2");
            qc.ancillas = anc == 2;
            have_header = true;
            continue;
        }
        if (!have_header) text::fail(line, "circuit must start with 'qubits n=<n>'");
        if (line.head == "ry") {
            text::allow_only(line, {"q", "theta"});
            qc.gates.emplace_back(qg::Ry{idx("q"), num("theta")});
        } else if (line.head == "x") {
            text::allow_only(line, {"q"});
            qc.gates.emplace_back(qg::X{idx("q")});
        } else if (line.head == "mcry") {
            text::allow_only(line, {"ctrls", "tgt", "theta"});
            qc.gates.emplace_back(qg::MultiControlledRy{parse_controls(line, "ctrls"), idx("tgt"), num("theta")});
        } else if (line.head == "mcx") {
            text::allow_only(line, {"ctrls", "tgt"});
            qc.gates.emplace_back(qg::MultiControlledX{parse_controls(line, "ctrls"), idx("tgt")});
        } else if (line.head == "selz") {
            text::allow_only(line, {"ctrls", "tgt", "neg"});
            const std::size_t neg = text::has(line, "neg") ? idx("neg") : 0;
            if (neg > 1) text::fail(line, "neg must be 0 or 1");
            qc.gates.emplace_back(qg::SelectZ{parse_controls(line, "ctrls"), idx("tgt"), neg == 1});
        } else if (line.head == "selref") {
            text::allow_only(line, {"ctrls", "pattern"});
            qc.gates.emplace_back(qg::SelectReflect{parse_controls(line, "ctrls"), parse_controls(line, "pattern")});
        } else if (line.head == "prep" || line.head == "unprep") {
            text::allow_only(line, {"a", "b", "c", "d"});
            qc.gates.emplace_back(qg::AnsatzPrep{{num("a"), num("b"), num("c"), num("d")}, line.head == "unprep"});
        } else if (line.head == "postselect") {
            text::allow_only(line, {"anc", "gamma"});
            if (text::has(line, "anc") && require(line, "anc") != "00") text::fail(line, "only anc=00 is supported");
            qc.gates.emplace_back(qg::Postselect{text::has(line, "gamma") ? num("gamma") : 1.0});
        } else if (line.head == "sqexact") {
            text::allow_only(line, {"cond", "t", "sign"});
            BitCondition cond;
            try {
                cond = parse_condition(require(line, "cond"));
            } catch (const Error &e) {
                text::fail(line, e.detail());
            }
            Sign sign = Sign::Plus;
            if (text::has(line, "sign")) {
                const auto &s = require(line, "sign");
                if (s != "+" && s != "-") text::fail(line, "sign must be + or -");
                sign = s == "+" ? Sign::Plus : Sign::Minus;
            }
            qc.gates.emplace_back(qg::ExactSqueeze{cond, num("t"), sign});
        } else {
            text::fail(line, "unknown qubit gate '" + line.head + "'");
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing 'qubits n=<n>' line");
    return qc;
}

}  // namespace symplectiq
