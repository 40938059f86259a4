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

#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "symplectiq/compiler.hpp"

namespace symplectiq {

namespace {

QubitGate cnot(std::size_t control, std::size_t target) {
    return qg::MultiControlledX{{{control, 1}}, target};
}

// Multi-controlled Ry as a product over control subsets S of
// exp(-i phi_S Y_t Z_S), phi_S = 2^-c (theta/2) (-1)^(S.v). Subsets are
// visited in Gray-code order so consecutive rotations differ by one CNOT.
void emit_mcry(std::vector<QubitGate> &out, const std::vector<Control> &controls, std::size_t target,
               double theta) {
    const std::size_t c = controls.size();
    if (c == 0) {
        out.emplace_back(qg::Ry{target, theta});
        return;
    }
    if (c > kMaxDecomposedControls) {
        throw Error(ErrorCode::CapacityExceeded,
                    "refusing to decompose a gate with " + std::to_string(c) + " controls");
    }
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < c; ++j) {
        if (controls[j].value == 1) v |= std::uint64_t{1} << j;
    }
    const double base = std::ldexp(theta / 2.0, -static_cast<int>(c));
    const std::uint64_t count = std::uint64_t{1} << c;
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t s = i ^ (i >> 1);
        if (s != prev) {
            out.push_back(cnot(controls[static_cast<std::size_t>(std::countr_zero(s ^ prev))].qubit, target));
        }
        const double phi = (std::popcount(s & v) % 2 == 0) ? base : -base;
        out.emplace_back(qg::Ry{target, 2.0 * phi});
        prev = s;
    }
    if (prev != 0) {
        out.push_back(cnot(controls[static_cast<std::size_t>(std::countr_zero(prev))].qubit, target));
    }
}

std::size_t free_qubit(const std::vector<Control> &controls, std::size_t target, const QubitCircuit &qc) {
    std::set<std::size_t> used{target};
    for (const auto &c : controls) used.insert(c.qubit);
    for (std::size_t q = 0; q <= qc.register_qubits; ++q) {
        if (used.count(q) == 0) return q;
    }
    // Ancillas are only safe inside an LCU block; callers never reach here
    // for register-only gates unless every register qubit is used.
    throw Error(ErrorCode::NotDecomposable,
                "multi-controlled X on every qubit has no real ancilla-free decomposition into one- and "
                "two-qubit gates");
}

}  // namespace

QubitCircuit decompose_multicontrols(const QubitCircuit &qc) {
    validate_qubit_circuit(qc);
    QubitCircuit out;
    out.register_qubits = qc.register_qubits;
    out.ancillas = qc.ancillas;
    for (const auto &g : qc.gates) {
        if (const auto *ry = std::get_if<qg::MultiControlledRy>(&g)) {
            emit_mcry(out.gates, ry->controls, ry->target, ry->theta);
        } else if (const auto *mcx = std::get_if<qg::MultiControlledX>(&g)) {
            if (mcx->controls.empty()) {
                out.gates.emplace_back(qg::X{mcx->target});
            } else if (mcx->controls.size() == 1) {
                out.gates.push_back(g);
            } else {
                // X = Ry(pi) Z: a controlled Z is a controlled -1 phase, realized as
                // a controlled Ry(2 pi) = -1 on any spare qubit.
                std::vector<Control> with_target = mcx->controls;
                with_target.push_back({mcx->target, 1});
                emit_mcry(out.gates, with_target, free_qubit(mcx->controls, mcx->target, qc), 2.0 * std::numbers::pi);
                emit_mcry(out.gates, mcx->controls, mcx->target, std::numbers::pi);
            }
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

}  // namespace symplectiq
