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

// Bit-structured interferometers and the {Rz, Ry, CRy} reverse compiler.
//
// A layer (k, l, theta) is a global beamsplitter on every mode whose bit k
// is 0, pairing it with the mode that differs in bit l. It compiles to one
// 0-controlled Ry(theta): control register qubit k, target register qubit l.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symplectiq/compiler.hpp"
#include "symplectiq/gb_circuit.hpp"
#include "symplectiq/simulator.hpp"

namespace symplectiq {

struct BitStructuredLayer {
    std::size_t k = 1;
    std::size_t l = 2;
    double theta = 0.0;
    friend bool operator==(const BitStructuredLayer &, const BitStructuredLayer &) = default;
};

struct Bqp1Instance {
    std::size_t n = 1;
    double x = 1.0;
    std::vector<BitStructuredLayer> layers;
    friend bool operator==(const Bqp1Instance &, const Bqp1Instance &) = default;
};

void validate_instance(const Bqp1Instance &inst);

/// GlobalBeamsplitter({(k, 0)}, l, theta / 4).
GbGate layer_to_gb(const BitStructuredLayer &layer);
GbCircuit instance_to_gb(const Bqp1Instance &inst);

enum class Decision { Yes, No, Indeterminate };
const char *decision_name(Decision d);

inline constexpr double kYesThreshold = 2.0 / 3.0;
inline constexpr double kNoThreshold = 1.0 / 3.0;

/// Yes above 2/3, No below 1/3, Indeterminate in between.
Decision decide(double q1_over_x);

struct BqpResult {
    double q1_over_x = 1.0;
    Decision decision = Decision::Yes;
    std::vector<TrajectoryPoint> trajectory;
};

/// Simulates from z = (x, 0, ..., 0). trace_every counts compiled gates,
/// which equal layers here.
BqpResult run_instance(const Bqp1Instance &inst, const RunOptions &options = {});

/// Format: "n <int>", "x <float>", then "layer k=<int> l=<int> theta=<float>".
std::string serialize_instance(const Bqp1Instance &inst);
Bqp1Instance parse_instance(std::string_view text);

/// Uniform layers: k != l uniform over 1..n, theta uniform in [-pi, pi).
Bqp1Instance random_instance(std::size_t n, std::size_t layers, std::uint64_t seed, double x = 1.0);

/// Planted instance with L layers and known final q1/x: 0.9 when `yes`,
/// 0.1 otherwise. A rotation layer sets the overlap, then h random layers
/// and their inverses in reverse order follow (L = 1 + 2h, or 2 + 2h with
/// the rotation split in two). Needs n >= 2, and L >= 1 unless yes.
Bqp1Instance planted_instance(std::size_t n, std::size_t layers, bool yes, std::uint64_t seed, double x = 1.0);

inline constexpr double kPlantedYesOverlap = 0.9;
inline constexpr double kPlantedNoOverlap = 0.1;

/// Gates over n qubits labelled 1..n (qubit k is bit k-1 of the basis
/// index). Rz(theta) = diag(e^{-i theta/2}, e^{i theta/2}),
/// Ry(theta) = exp(-i theta Y / 2), CRy applies Ry to target when control is 1.
struct UnitaryGate {
    enum class Kind { Rz, Ry, CRy };
    Kind kind = Kind::Ry;
    std::size_t target = 1;
    std::size_t control = 0;  // CRy only
    double theta = 0.0;
    friend bool operator==(const UnitaryGate &, const UnitaryGate &) = default;
};

struct UnitaryCircuit {
    std::size_t n = 1;
    std::vector<UnitaryGate> gates;
    friend bool operator==(const UnitaryCircuit &, const UnitaryCircuit &) = default;
};

/// Format: "qubits <n>", then "rz q=<k> theta=", "ry q=<k> theta=",
/// "cry ctrl=<l> tgt=<k> theta=".
UnitaryCircuit parse_unitary_circuit(std::string_view text);
std::string serialize_unitary_circuit(const UnitaryCircuit &uc);

/// Rz_k(tau) -> GlobalPhase({(k,1)}, -tau/2) (equal to Rz up to a global
/// phase), Ry_k(tau) -> GlobalBeamsplitter({}, k, tau/4),
/// CRy(l -> k, tau) -> GlobalBeamsplitter({(l,1)}, k, tau/4).
std::vector<GbGate> reverse_compile(const UnitaryCircuit &uc);
GbCircuit reverse_compile_circuit(const UnitaryCircuit &uc);

/// q_{r+1} = x Re(psi_r), p_{r+1} = x Im(psi_r).
MomentVector real_double(std::span<const std::complex<double>> psi, double x = 1.0);

/// F(pi/2) on qubits (k, l): one 0-controlled Ry(pi) layer.
std::vector<BitStructuredLayer> f_gate_layers(std::size_t k = 1, std::size_t l = 2);

}  // namespace symplectiq
