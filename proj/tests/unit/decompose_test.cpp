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

#include <numbers>

#include "gtest/gtest.h"

#include "symplectiq/compiler.hpp"
#include "symplectiq/simulator.hpp"
#include "test_util.hpp"

using namespace symplectiq;
using symplectiq::testutil::max_abs;

namespace {

QubitCircuit circuit(std::size_t n, std::vector<QubitGate> gates) {
    QubitCircuit qc;
    qc.register_qubits = n;
    qc.gates = std::move(gates);
    return qc;
}

std::size_t max_arity(const QubitCircuit &qc) {
    std::size_t out = 0;
    for (const auto &g : qc.gates) out = std::max(out, gate_qubits(g, qc.register_qubits).size());
    return out;
}

std::size_t cnot_count(const QubitCircuit &qc) {
    std::size_t out = 0;
    for (const auto &g : qc.gates) out += std::holds_alternative<qg::MultiControlledX>(g);
    return out;
}

std::vector<Control> random_controls(Philox4x32 &rng, std::size_t n, std::size_t target) {
    std::vector<Control> out;
    for (std::size_t q = 0; q <= n; ++q) {
        if (q != target && rng.next_u32() % 2 == 0) out.push_back({q, static_cast<int>(rng.next_u32() % 2)});
    }
    return out;
}

}  // namespace

TEST(decompose, no_controls_unchanged) {
    const QubitCircuit qc = circuit(2, {qg::Ry{1, 0.3}, qg::X{2}});
    EXPECT_EQ(decompose_multicontrols(qc), qc);
    EXPECT_EQ(decompose_multicontrols(circuit(1, {qg::MultiControlledRy{{}, 1, 0.3}})).gates,
              (std::vector<QubitGate>{qg::Ry{1, 0.3}}));
}

TEST(decompose, single_control_is_two_cnots) {
    const QubitCircuit qc = circuit(1, {qg::MultiControlledRy{{{1, 1}}, 0, 0.9}});
    const QubitCircuit d = decompose_multicontrols(qc);
    ASSERT_EQ(d.gates.size(), 4u);
    EXPECT_EQ(std::get<qg::Ry>(d.gates[0]), (qg::Ry{0, 0.45}));
    EXPECT_EQ(std::get<qg::MultiControlledX>(d.gates[1]), (qg::MultiControlledX{{{1, 1}}, 0}));
    EXPECT_EQ(std::get<qg::Ry>(d.gates[2]), (qg::Ry{0, -0.45}));
    EXPECT_EQ(d.gates[3], d.gates[1]);
    EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-15);
}

TEST(decompose, zero_control_polarity) {
    const QubitCircuit qc = circuit(2, {qg::MultiControlledRy{{{1, 0}, {2, 1}}, 0, -1.3}});
    const QubitCircuit d = decompose_multicontrols(qc);
    EXPECT_EQ(cnot_count(d), 4u);
    EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-14);
}

TEST(decompose, toffoli_uses_spare_qubit) {
    const QubitCircuit qc = circuit(3, {qg::MultiControlledX{{{1, 1}, {2, 0}}, 0}});
    const QubitCircuit d = decompose_multicontrols(qc);
    EXPECT_LE(max_arity(d), 2u);
    EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-14);
}

TEST(decompose, full_width_toffoli_refused) {
    try {
        decompose_multicontrols(circuit(2, {qg::MultiControlledX{{{0, 1}, {1, 1}}, 2}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDecomposable);
    }
}

TEST(decompose, compiled_beamsplitter) {
    const QubitCircuit qc = compile(GbCircuit{8, {gb::Beamsplitter{2, 8, 0.37}}});
    const QubitCircuit d = decompose_multicontrols(qc);
    EXPECT_LE(max_arity(d), 2u);
    EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-13);
}

TEST(decompose, lcu_gates_pass_through) {
    const QubitCircuit qc = compile(GbCircuit{2, {gb::Squeeze{1, 0.02, Sign::Plus}, gb::Phase{2, 0.2}}});
    const QubitCircuit d = decompose_multicontrols(qc);
    EXPECT_EQ(d.gates.front(), qc.gates.front());
    EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-13);
}

TEST(decompose_properties, random_circuits_keep_their_matrix) {
    Philox4x32 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = testutil::pick(rng, 1, 4);
        QubitCircuit qc;
        qc.register_qubits = n;
        for (int i = 0; i < 8; ++i) {
            const std::size_t target = testutil::pick(rng, 0, n);
            auto ctrls = random_controls(rng, n, target);
            if (rng.next_u32() % 3 == 0 && ctrls.size() < n) {
                qc.gates.push_back(qg::MultiControlledX{std::move(ctrls), target});
            } else {
                qc.gates.push_back(qg::MultiControlledRy{std::move(ctrls), target, testutil::uniform(rng, -4, 4)});
            }
        }
        const QubitCircuit d = decompose_multicontrols(qc);
        EXPECT_LE(max_arity(d), 2u);
        EXPECT_LT(max_abs(dense_matrix(d) - dense_matrix(qc)), 1e-10);
    }
}

TEST(decompose_properties, cnot_count_is_two_to_the_controls) {
    for (std::size_t c = 1; c <= 4; ++c) {
        std::vector<Control> ctrls;
        for (std::size_t q = 1; q <= c; ++q) ctrls.push_back({q, static_cast<int>(q % 2)});
        const QubitCircuit d = decompose_multicontrols(circuit(c, {qg::MultiControlledRy{ctrls, 0, 0.5}}));
        EXPECT_EQ(cnot_count(d), std::size_t{1} << c);
    }
}
