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

#include "symplectiq/bqp.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace symplectiq;
using symplectiq::testutil::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

std::string read_file(const std::string &name) {
    std::ifstream in(std::string(SYMPLECTIQ_EXAMPLES_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double pipeline_overlap(const UnitaryCircuit &uc, double x) {
    std::vector<std::complex<double>> psi0(std::size_t{1} << uc.n, 0.0);
    psi0[0] = 1.0;
    const GbCircuit c = reverse_compile_circuit(uc);
    const RunResult r = run(compile(c), encode_mean(real_double(psi0, x)));
    const MomentVector z = decode_mean(r.state);
    return (z.q(0) * z.q(0) + z.p(0) * z.p(0)) / (x * x);
}

}  // namespace

TEST(bqp, layer_maps_to_zero_controlled_global_beamsplitter) {
    const GbGate g = layer_to_gb({2, 3, 0.8});
    const auto &bs = std::get<gb::GlobalBeamsplitter>(g);
    EXPECT_EQ(bs.cond, (BitCondition{{{2, 0}}}));
    EXPECT_EQ(bs.l, 3u);
    EXPECT_EQ(bs.t, 0.2);
    const QubitCircuit qc = compile(instance_to_gb({3, 1.0, {{2, 3, 0.8}}}));
    ASSERT_EQ(qc.gates.size(), 1u);
    EXPECT_EQ(std::get<qg::MultiControlledRy>(qc.gates[0]), (qg::MultiControlledRy{{{2, 0}}, 3, 0.8}));
}

TEST(bqp, thresholds) {
    EXPECT_EQ(decide(0.9), Decision::Yes);
    EXPECT_EQ(decide(1.0), Decision::Yes);
    EXPECT_EQ(decide(2.0 / 3.0), Decision::Indeterminate);
    EXPECT_EQ(decide(0.5), Decision::Indeterminate);
    EXPECT_EQ(decide(1.0 / 3.0), Decision::Indeterminate);
    EXPECT_EQ(decide(0.1), Decision::No);
    EXPECT_EQ(decide(-1.0), Decision::No);
    EXPECT_STREQ(decision_name(Decision::Yes), "YES");
}

TEST(bqp, validation) {
    EXPECT_THROW(validate_instance({1, 1.0, {}}), Error);
    EXPECT_THROW(validate_instance({3, 1.0, {{1, 1, 0.1}}}), Error);
    EXPECT_THROW(validate_instance({3, 1.0, {{1, 4, 0.1}}}), Error);
    EXPECT_THROW(validate_instance({3, 0.0, {}}), Error);
    EXPECT_NO_THROW(validate_instance({3, 1.0, {{3, 1, 0.1}}}));
}

TEST(bqp, single_layer_overlap) {
    const BqpResult r = run_instance({4, 2.0, {{1, 2, 1.0}}});
    EXPECT_NEAR(r.q1_over_x, std::cos(0.5), 1e-15);
    EXPECT_EQ(r.decision, Decision::Yes);
    ASSERT_EQ(r.trajectory.size(), 2u);
    EXPECT_EQ(r.trajectory.front().overlap, 1.0);
}

TEST(bqp, example_instance_matches_oracle) {
    const Bqp1Instance inst = parse_instance(read_file("small.bqp"));
    EXPECT_EQ(inst.n, 3u);
    EXPECT_EQ(inst.x, 1.5);
    ASSERT_EQ(inst.layers.size(), 3u);
    const GbCircuit c = instance_to_gb(inst);
    RealVector z0 = RealVector::Zero(16);
    z0[0] = inst.x;
    const MomentVector z = propagate_mean(c, MomentVector(z0));
    EXPECT_NEAR(run_instance(inst).q1_over_x, z.q(0) / inst.x, 1e-13);
}

TEST(bqp, text_roundtrip) {
    const Bqp1Instance inst = random_instance(5, 12, 77, 0.5);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
    EXPECT_THROW(parse_instance("x 1\n"), Error);
    EXPECT_THROW(parse_instance("n 3\nlayer k=1 l=2\n"), Error);
    EXPECT_THROW(parse_instance("n 3\nlayer k=1 l=2 theta=0 extra=1\n"), Error);
}

TEST(bqp, random_instances_are_seeded) {
    const Bqp1Instance a = random_instance(6, 40, 5);
    EXPECT_EQ(a, random_instance(6, 40, 5));
    EXPECT_NE(a, random_instance(6, 40, 6));
    for (const auto &l : a.layers) {
        EXPECT_NE(l.k, l.l);
        EXPECT_GE(l.k, 1u);
        EXPECT_LE(l.l, 6u);
        EXPECT_GE(l.theta, -kPi);
        EXPECT_LT(l.theta, kPi);
    }
}

TEST(bqp_properties, planted_instances_hit_their_overlap) {
    for (std::size_t layers : {1, 2, 7, 10, 31}) {
        for (bool yes : {true, false}) {
            const Bqp1Instance inst = planted_instance(6, layers, yes, 1000 + layers);
            EXPECT_EQ(inst.layers.size(), layers);
            const BqpResult r = run_instance(inst);
            EXPECT_NEAR(r.q1_over_x, yes ? kPlantedYesOverlap : kPlantedNoOverlap, 1e-12);
            EXPECT_EQ(r.decision, yes ? Decision::Yes : Decision::No);
        }
    }
    EXPECT_TRUE(planted_instance(3, 0, true, 1).layers.empty());
    EXPECT_THROW(planted_instance(3, 0, false, 1), Error);
}

TEST(bqp, trajectory_every_layer) {
    RunOptions opt;
    opt.trace_every = 1;
    const BqpResult r = run_instance(planted_instance(4, 9, true, 3), opt);
    ASSERT_EQ(r.trajectory.size(), 10u);
    EXPECT_NEAR(r.trajectory[1].overlap, kPlantedYesOverlap, 1e-14);
    EXPECT_NEAR(r.trajectory.back().overlap, kPlantedYesOverlap, 1e-12);
}

TEST(reverse_compiler, mapping_table) {
    const UnitaryCircuit uc{3,
                            {{UnitaryGate::Kind::Rz, 2, 0, 0.4},
                             {UnitaryGate::Kind::Ry, 1, 0, 0.8},
                             {UnitaryGate::Kind::CRy, 3, 1, -1.2}}};
    const auto gates = reverse_compile(uc);
    ASSERT_EQ(gates.size(), 3u);
    EXPECT_EQ(std::get<gb::GlobalPhase>(gates[0]), (gb::GlobalPhase{BitCondition{{{2, 1}}}, -0.2}));
    EXPECT_EQ(std::get<gb::GlobalBeamsplitter>(gates[1]), (gb::GlobalBeamsplitter{BitCondition{}, 1, 0.2}));
    EXPECT_EQ(std::get<gb::GlobalBeamsplitter>(gates[2]), (gb::GlobalBeamsplitter{BitCondition{{{1, 1}}}, 3, -0.3}));
    EXPECT_EQ(reverse_compile_circuit(uc).modes, 8u);
}

TEST(reverse_compiler, example_file) {
    const UnitaryCircuit uc = parse_unitary_circuit(read_file("ghz3.uc"));
    EXPECT_EQ(uc.n, 3u);
    EXPECT_EQ(uc.gates.size(), 5u);
    EXPECT_EQ(parse_unitary_circuit(serialize_unitary_circuit(uc)), uc);
    const auto psi = testutil::simulate_unitary(uc);
    EXPECT_NEAR(pipeline_overlap(uc, 1.0), std::norm(psi[0]), 1e-12);
}

TEST(reverse_compiler, parse_errors) {
    try {
        parse_unitary_circuit("qubits 2\nh q=1\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedGate);
    }
    EXPECT_THROW(parse_unitary_circuit("ry q=1 theta=0\n"), Error);
    EXPECT_THROW(reverse_compile_circuit(parse_unitary_circuit("qubits 2\ncry ctrl=1 tgt=1 theta=1\n")), Error);
    EXPECT_THROW(reverse_compile_circuit(parse_unitary_circuit("qubits 2\nry q=3 theta=1\n")), Error);
}

TEST(reverse_compiler, real_double_layout) {
    const std::vector<std::complex<double>> psi = {{0.6, 0.0}, {0.0, 0.8}};
    const MomentVector z = real_double(psi, 2.0);
    EXPECT_EQ(z.modes(), 2u);
    EXPECT_EQ(z.q(0), 1.2);
    EXPECT_EQ(z.p(1), 1.6);
    EXPECT_EQ(z.q(1), 0.0);
    EXPECT_THROW(real_double(std::vector<std::complex<double>>(3), 1.0), Error);
}

TEST(reverse_compiler, f_gate_sign) {
    const auto layers = f_gate_layers();
    ASSERT_EQ(layers.size(), 1u);
    EXPECT_EQ(layers[0], (BitStructuredLayer{1, 2, kPi}));
    RealVector z0 = RealVector::Zero(8);
    z0[2] = 1.0;  // q of mode 3, bits (m1, m2) = (0, 1)
    const MomentVector z = propagate_mean(instance_to_gb({2, 1.0, layers}), MomentVector(z0));
    EXPECT_NEAR(z.q(0), -1.0, 1e-15);
    EXPECT_NEAR(z.q(2), 0.0, 1e-15);
    EXPECT_THROW(f_gate_layers(2, 2), Error);
}

TEST(reverse_compiler_properties, matches_direct_simulation) {
    Philox4x32 rng(404);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = testutil::pick(rng, 2, 4);
        const UnitaryCircuit uc = testutil::random_unitary_circuit(rng, n, testutil::pick(rng, 1, 20));
        const auto psi = testutil::simulate_unitary(uc);
        const double x = testutil::uniform(rng, 0.5, 3.0);
        EXPECT_NEAR(pipeline_overlap(uc, x), std::norm(psi[0]), 1e-10);
        // Full amplitudes agree up to one global phase.
        std::vector<std::complex<double>> psi0(psi.size(), 0.0);
        psi0[0] = 1.0;
        const MomentVector z = propagate_mean(reverse_compile_circuit(uc), real_double(psi0, 1.0));
        std::complex<double> phase = 0.0;
        for (std::size_t r = 0; r < psi.size(); ++r) {
            phase += std::complex<double>(z.q(r), z.p(r)) * std::conj(psi[r]);
        }
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
    }
}
