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

// Statevector simulation of compiled circuits.
//
// A moment vector z on M = 2^n modes is stored as the unit vector z / |z| on
// n+1 qubits, amplitude index s*M + (m-1) with s = 0 for q and s = 1 for p,
// together with scale = |z|.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symplectiq/qubit_circuit.hpp"
#include "symplectiq/symplectic.hpp"

namespace symplectiq {

inline constexpr std::size_t kDefaultCapacityQubits = 27;
inline constexpr std::size_t kHardCapacityQubits = 30;

/// Throws CapacityExceeded with a sizing hint when `qubits` > `limit`.
void check_capacity(std::size_t qubits, std::size_t limit = kDefaultCapacityQubits);

struct ScaledState {
    std::size_t register_qubits = 0;  // n
    std::vector<double> amplitudes;   // 2^(n+1), unit norm
    double scale = 1.0;               // |<z>|
    double success_log = 0.0;         // sum of ln p over postselections

    std::size_t modes() const { return std::size_t{1} << register_qubits; }
    /// |0...0> with the given scale, i.e. z = (scale, 0, ..., 0).
    static ScaledState basis_zero(std::size_t n, double scale = 1.0,
                                  std::size_t capacity = kDefaultCapacityQubits);
};

ScaledState encode_mean(const MomentVector &z, std::size_t capacity = kDefaultCapacityQubits);
MomentVector decode_mean(const ScaledState &s);

/// Applies a gate that does not touch the ancillas. Unitary gates keep the
/// norm; ExactSqueeze renormalizes and folds the growth into `scale`.
void apply_gate(ScaledState &s, const QubitGate &g);

void apply_squeeze_exact(ScaledState &s, const BitCondition &cond, double t, Sign sign);
void apply_squeeze_exact(ScaledState &s, std::size_t m, double t, Sign sign);

/// Runs prep ... postselect on the ancilla-extended state. Records ln p in
/// success_log, renormalizes, and multiplies scale by sqrt(p) / gamma.
/// Returns p.
double apply_lcu_block(ScaledState &s, std::span<const QubitGate> block);

struct TrajectoryPoint {
    std::size_t step = 0;
    std::size_t gate_index = 0;  // gates applied so far
    double overlap = 0.0;        // amplitude at index 0
};

struct RunOptions {
    std::size_t trace_every = 0;  // 0: initial and final points only
    std::size_t capacity_qubits = kDefaultCapacityQubits;
};

struct RunResult {
    ScaledState state;
    std::vector<TrajectoryPoint> trajectory;
};

RunResult run(const QubitCircuit &qc, ScaledState s0, const RunOptions &options = {});

/// "step,gate_index,overlap" with 17 significant digits.
std::string trajectory_csv(const std::vector<TrajectoryPoint> &trajectory);

/// The circuit as a linear map on unnormalized 2M vectors: postselection
/// projects and divides by gamma, exact squeezes multiply.
RealVector apply_linear(const QubitCircuit &qc, const RealVector &v);
/// Matrix of apply_linear, 2M x 2M (M <= 2^12).
RealMatrix dense_matrix(const QubitCircuit &qc);

/// Normalized covariance: matrix has unit trace, trace_scale = tr(sigma).
struct SigmaState {
    RealMatrix matrix;
    double trace_scale = 1.0;

    static SigmaState from_covariance(const CovarianceMatrix &sigma);
    RealMatrix physical() const { return matrix * trace_scale; }
};

/// L sigma L^T for the circuit's linear map L, applied to columns then
/// rows. `kind` must not be Mixed and must agree with the circuit content
/// (rotations vs squeezes).
SigmaState evolve_sigma(const QubitCircuit &qc, const SigmaState &sigma0, GeneratorKind kind);

/// Generator class of a compiled circuit: ParticlePreserving without
/// squeezes, NonParticlePreserving without rotations, Mixed otherwise.
GeneratorKind circuit_kind(const QubitCircuit &qc);

/// Binary snapshot: 16-byte header (magic "SQS1", uint32 n, f64 scale),
/// then 2^(n+1) f64 amplitudes, all little-endian.
void write_snapshot(std::ostream &out, const ScaledState &s);
ScaledState read_snapshot(std::istream &in, std::size_t capacity = kDefaultCapacityQubits);

}  // namespace symplectiq
