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

#include "symplectiq/compiler.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace symplectiq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Control> to_controls(const BitCondition &cond) {
    std::vector<Control> out;
    out.reserve(cond.clauses.size());
    for (const auto &c : cond.clauses) out.push_back({c.bit, c.value});
    return out;
}

QubitGate controlled_ry(std::vector<Control> controls, std::size_t target, double theta) {
    if (controls.empty()) return qg::Ry{target, theta};
    return qg::MultiControlledRy{std::move(controls), target, theta};
}

void check_mode(std::size_t m, std::size_t n) {
    if (m < 1 || m > (std::size_t{1} << n)) {
        throw Error(ErrorCode::ModeOutOfRange,
                    "mode " + std::to_string(m) + " outside 1.." + std::to_string(std::size_t{1} << n));
    }
}

}  // namespace

LcuCoefficients lcu_coefficients(double t, Sign sign) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw Error(ErrorCode::LcuTimeOutOfRange, "LCU step must satisfy 0 <= t < 1, got " + std::to_string(t));
    }
    const double denom = 1.0 + 2.0 * t;
    LcuCoefficients out;
    out.a = (1.0 - t) / denom;
    out.b = t / denom;
    out.c = sign == Sign::Plus ? 2.0 * t / denom : 0.0;
    out.d = sign == Sign::Plus ? 0.0 : 2.0 * t / denom;
    out.gamma = 1.0 / denom;
    return out;
}

std::vector<Control> mode_controls(std::size_t m, std::size_t n) {
    check_mode(m, n);
    return to_controls(condition_for_mode(m, n));
}

std::vector<QubitGate> compile_phase(std::size_t m, double t, std::size_t n) {
    return {controlled_ry(mode_controls(m, n), 0, -4.0 * t)};
}

std::vector<QubitGate> compile_beamsplitter(std::size_t m, std::size_t mp, double t, std::size_t n) {
    check_mode(m, n);
    check_mode(mp, n);
    if (m == mp) throw Error(ErrorCode::ModesMustDiffer, "beamsplitter modes must differ");
    const std::uint64_t a = m - 1;
    const std::uint64_t b = mp - 1;
    const std::uint64_t diff = a ^ b;
    const std::size_t d1 = static_cast<std::size_t>(std::countr_zero(diff)) + 1;
    const bool a_has_d1 = ((a >> (d1 - 1)) & 1U) != 0;

    std::vector<QubitGate> basis;
    if (a_has_d1) basis.emplace_back(qg::X{d1});
    // After B, m sits on d1 = 0 and m' on d1 = 1. Clear the other differing
    // bits of m under d1 = 0 and those of m' under d1 = 1.
    for (int side = 0; side < 2; ++side) {
        const std::uint64_t source = side == 0 ? a : b;
        for (std::size_t k = d1 + 1; k <= n; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << (k - 1);
            if ((diff & bit) != 0 && (source & bit) != 0) {
                basis.emplace_back(qg::MultiControlledX{{{d1, side}}, k});
            }
        }
    }

    std::vector<Control> controls;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == d1) continue;
        const std::uint64_t bit = std::uint64_t{1} << (k - 1);
        controls.push_back({k, (diff & bit) != 0 ? 0 : static_cast<int>((a >> (k - 1)) & 1U)});
    }

    std::vector<QubitGate> out = basis;
    out.push_back(controlled_ry(std::move(controls), d1, 4.0 * t));
    out.insert(out.end(), basis.rbegin(), basis.rend());
    return out;
}

std::vector<QubitGate> lcu_block(const BitCondition &cond, double t, Sign sign, std::size_t n) {
    const LcuCoefficients k = lcu_coefficients(t, sign);
    const std::size_t a1 = n + 1;  // low ancilla bit
    const std::size_t a2 = n + 2;  // high ancilla bit
    const auto reg = to_controls(cond);

    std::vector<QubitGate> out;
    out.emplace_back(qg::AnsatzPrep{{k.a, k.b, k.c, k.d}, false});
    // b-term, ancilla j = 1: register reflection 2P - 1.
    out.emplace_back(qg::SelectReflect{{{a1, 1}, {a2, 0}}, reg});
    // c-term (j = 2): Z (x) P + 1 (x) (1 - P); d-term (j = 3): -Z (x) P + 1 (x) (1 - P).
    std::vector<Control> sel = sign == Sign::Plus ? std::vector<Control>{{a1, 0}, {a2, 1}}
                                                  : std::vector<Control>{{a1, 1}, {a2, 1}};
    sel.insert(sel.end(), reg.begin(), reg.end());
    out.emplace_back(qg::SelectZ{std::move(sel), 0, sign == Sign::Minus});
    out.emplace_back(qg::AnsatzPrep{{k.a, k.b, k.c, k.d}, true});
    out.emplace_back(qg::Postselect{k.gamma});
    return out;
}

std::vector<QubitGate> compile_squeeze_lcu(const BitCondition &cond, double t, Sign sign, std::size_t n,
                                           double step) {
    if (!(step > 0.0 && step < 1.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::LcuTimeOutOfRange, "LCU step must lie in (0, 1)");
    }
    const Sign effective = t < 0.0 ? flip(sign) : sign;
    const double total = std::abs(t);
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(total / step - 1e-12)));
    const double tau = total / static_cast<double>(steps);
    std::vector<QubitGate> out;
    for (std::size_t i = 0; i < steps; ++i) {
        auto block = lcu_block(cond, tau, effective, n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<QubitGate> compile_squeeze_lcu(std::size_t m, double t, Sign sign, std::size_t n, double step) {
    check_mode(m, n);
    return compile_squeeze_lcu(condition_for_mode(m, n), t, sign, n, step);
}

std::vector<QubitGate> compile_gate(const GbGate &g, std::size_t n, const CompileOptions &options) {
    auto squeeze = [&](const BitCondition &cond, double t, Sign sign) -> std::vector<QubitGate> {
        if (options.squeeze == SqueezeMode::Exact) return {qg::ExactSqueeze{cond, t, sign}};
        return compile_squeeze_lcu(cond, t, sign, n, options.lcu_step);
    };
    return std::visit(
        overloaded{
            [&](const gb::Phase &x) { return compile_phase(x.m, x.t, n); },
            [&](const gb::Beamsplitter &x) { return compile_beamsplitter(x.m, x.mp, x.t, n); },
            [&](const gb::Squeeze &x) {
                check_mode(x.m, n);
                return squeeze(condition_for_mode(x.m, n), x.t, x.sign);
            },
            [&](const gb::GlobalPhase &x) {
                return std::vector<QubitGate>{controlled_ry(to_controls(x.cond), 0, -4.0 * x.t)};
            },
            [&](const gb::GlobalBeamsplitter &x) {
                return std::vector<QubitGate>{controlled_ry(to_controls(x.cond), x.l, 4.0 * x.t)};
            },
            [&](const gb::GlobalSqueeze &x) { return squeeze(x.cond, x.t, x.sign); },
            [&](const gb::Displacement &) -> std::vector<QubitGate> {
                throw Error(ErrorCode::DisplacementUnsupported,
                            "displacement is not a quadratic generator and cannot be compiled into a linear "
                            "qubit gate");
            },
        },
        g);
}

QubitCircuit compile(const GbCircuit &c, const CompileOptions &options) {
    require_valid(c);
    QubitCircuit qc;
    qc.register_qubits = c.bits();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        std::vector<QubitGate> gates;
        try {
            gates = compile_gate(c.gates[i], qc.register_qubits, options);
        } catch (const Error &e) {
            throw Error(e.code(), "gate " + std::to_string(i) + " (" + gate_name(c.gates[i]) + "): " + e.detail());
        }
        for (auto &g : gates) {
            if (std::holds_alternative<qg::AnsatzPrep>(g)) qc.ancillas = true;
            qc.gates.push_back(std::move(g));
        }
    }
    return qc;
}

}  // namespace symplectiq
