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

// Compiled real-gate qubit circuits.
//
// Qubit labels: 0 is the symplectic qubit (q-block vs p-block), 1..n are the
// register qubits (label k carries bit k of m-1), n+1 and n+2 are the LCU
// ancillas. The ancilla pair is read as a 2-bit number j = 2*a_{n+2} + a_{n+1}
// written "a_{n+2}a_{n+1}", so anc=01 means qubit n+1 set.
//
// Ry(theta) = exp(-i theta Y / 2) = [[cos, -sin], [sin, cos]] (half angles).

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symplectiq/gb_circuit.hpp"

namespace symplectiq {

struct Control {
    std::size_t qubit = 0;
    int value = 1;

    friend bool operator==(const Control &, const Control &) = default;
};

namespace qg {

struct Ry {
    std::size_t target = 0;
    double theta = 0.0;
    friend bool operator==(const Ry &, const Ry &) = default;
};
struct X {
    std::size_t target = 0;
    friend bool operator==(const X &, const X &) = default;
};
struct MultiControlledRy {
    std::vector<Control> controls;
    std::size_t target = 0;
    double theta = 0.0;
    friend bool operator==(const MultiControlledRy &, const MultiControlledRy &) = default;
};
struct MultiControlledX {
    std::vector<Control> controls;
    std::size_t target = 0;
    friend bool operator==(const MultiControlledX &, const MultiControlledX &) = default;
};
/// Z (or -Z when `negated`) on `target` where every control matches.
struct SelectZ {
    std::vector<Control> controls;
    std::size_t target = 0;
    bool negated = false;
    friend bool operator==(const SelectZ &, const SelectZ &) = default;
};
/// Phase -1 on basis states where `controls` match but `pattern` does not,
/// i.e. the reflection 2P - 1 about the pattern, applied under the controls.
struct SelectReflect {
    std::vector<Control> controls;
    std::vector<Control> pattern;
    friend bool operator==(const SelectReflect &, const SelectReflect &) = default;
};
/// Householder map |00> -> sum_j sqrt(w_j) |j> on the ancilla pair. It is
/// its own inverse; `inverse` only records which side of a block it sits on.
struct AnsatzPrep {
    std::array<double, 4> weights{1.0, 0.0, 0.0, 0.0};
    bool inverse = false;

    std::array<double, 4> amplitudes() const;
    friend bool operator==(const AnsatzPrep &, const AnsatzPrep &) = default;
};
/// Projects the ancillas onto |00>. `gamma` is the block normalization: the
/// postselected operator approximates gamma * exp(t Omega K).
struct Postselect {
    double gamma = 1.0;
    friend bool operator==(const Postselect &, const Postselect &) = default;
};
/// Simulator-native exact squeeze on every register state matching `cond`:
/// q-amplitudes times exp(+-2t), p-amplitudes times exp(-+2t).
struct ExactSqueeze {
    BitCondition cond;
    double t = 0.0;
    Sign sign = Sign::Plus;
    friend bool operator==(const ExactSqueeze &, const ExactSqueeze &) = default;
};

}  // namespace qg

using QubitGate = std::variant<qg::Ry, qg::X, qg::MultiControlledRy, qg::MultiControlledX, qg::SelectZ,
                               qg::SelectReflect, qg::AnsatzPrep, qg::Postselect, qg::ExactSqueeze>;

struct QubitCircuit {
    std::size_t register_qubits = 0;  // n
    bool ancillas = false;
    std::vector<QubitGate> gates;

    std::size_t total_qubits() const { return register_qubits + 1 + (ancillas ? 2 : 0); }
    std::size_t ancilla(std::size_t i) const { return register_qubits + 1 + i; }
    /// Gate indices of the Postselect gates.
    std::vector<std::size_t> postselect_points() const;

    friend bool operator==(const QubitCircuit &, const QubitCircuit &) = default;
};

/// Bit position of qubit label `q` in a basis-state index: the register
/// qubits occupy the low n bits, the symplectic qubit bit n and the ancillas
/// bits n+1, n+2.
inline std::size_t bit_position(std::size_t q, std::size_t n) {
    return q == 0 ? n : (q <= n ? q - 1 : q);
}

/// Qubits a gate touches (controls and targets, by label).
std::vector<std::size_t> gate_qubits(const QubitGate &g, std::size_t n);
const char *qubit_gate_name(const QubitGate &g);

/// Throws on out-of-range or repeated qubits, non-finite angles, bad ansatz
/// weights, and ancilla use outside a prep/postselect block.
void validate_qubit_circuit(const QubitCircuit &qc);

/// Format:
///   qubits n=3 ancillas=2
///   ry q=0 theta=0.4
///   x q=2
///   mcry ctrls=1:0,2:1,3:1 tgt=0 theta=1.2
///   mcx ctrls=2:0 tgt=3
///   selz ctrls=4:1,5:0,1:1 tgt=0 neg=0
///   selref ctrls=4:1,5:0 pattern=1:1,2:1
///   prep a=0.75 b=0.0833 c=0.1667 d=0
///   unprep a=... b=... c=... d=...
///   postselect anc=00 gamma=0.8333
///   sqexact cond=1:0 t=0.1 sign=+
std::string serialize_qubit_circuit(const QubitCircuit &qc);
QubitCircuit parse_qubit_circuit(std::string_view text);

}  // namespace symplectiq
