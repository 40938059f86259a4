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

// GB gate -> real qubit gate dictionary.
//
// Angle conventions (Ry(theta) = exp(-i theta Y / 2)):
//   phase(m, t)          mcry on the symplectic qubit, controls = bits of m-1, theta = -4t
//   bs(m, m', t)         basis change, then mcry(theta = +4t) on the lowest differing bit
//   gphase(cond, t)      mcry on the symplectic qubit, controls = cond, theta = -4t
//   gbs(cond, l, t)      mcry on register qubit l, controls = cond, theta = +4t
//   sq / gsq             LCU blocks of step <= lcu_step, or exact simulator-native squeezes
// The phase rotation is clockwise in the (q, p) plane, hence the minus sign.

#include <cstddef>
#include <vector>

#include "symplectiq/gb_circuit.hpp"
#include "symplectiq/qubit_circuit.hpp"

namespace symplectiq {

struct LcuCoefficients {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double gamma = 1.0;
};

/// a = (1-t)/(1+2t), b = t/(1+2t), c = (t+-t)/(1+2t), d = (t-+t)/(1+2t),
/// gamma = 1/(1+2t). Requires 0 <= t < 1.
LcuCoefficients lcu_coefficients(double t, Sign sign);

enum class SqueezeMode { Lcu, Exact };

struct CompileOptions {
    double lcu_step = 0.05;
    SqueezeMode squeeze = SqueezeMode::Lcu;
};

/// Register controls selecting mode m (1-based) on n bits.
std::vector<Control> mode_controls(std::size_t m, std::size_t n);

std::vector<QubitGate> compile_phase(std::size_t m, double t, std::size_t n);
std::vector<QubitGate> compile_beamsplitter(std::size_t m, std::size_t mp, double t, std::size_t n);

/// One LCU block: prep, b-term reflection, c- or d-term select-Z, unprep,
/// postselect. `t` must lie in [0, 1).
std::vector<QubitGate> lcu_block(const BitCondition &cond, double t, Sign sign, std::size_t n);

/// Splits |t| into ceil(|t| / step) LCU blocks (at least one). A negative t
/// flips the sign.
std::vector<QubitGate> compile_squeeze_lcu(const BitCondition &cond, double t, Sign sign, std::size_t n,
                                           double step = 0.05);
std::vector<QubitGate> compile_squeeze_lcu(std::size_t m, double t, Sign sign, std::size_t n,
                                           double step = 0.05);

std::vector<QubitGate> compile_gate(const GbGate &g, std::size_t n, const CompileOptions &options = {});

/// Errors from individual gates are rethrown with the gate index.
QubitCircuit compile(const GbCircuit &c, const CompileOptions &options = {});

inline constexpr std::size_t kMaxDecomposedControls = 16;

/// Rewrites every multi-controlled Ry/X with two or more controls into Ry,
/// X and CNOT gates (mcx with one control). Exact, ancilla-free, and uses
/// 2^c CNOTs for c controls. Multi-controlled X whose controls and target
/// cover every qubit of the circuit throws NotDecomposable. LCU gates are
/// left as they are.
QubitCircuit decompose_multicontrols(const QubitCircuit &qc);

}  // namespace symplectiq
