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

// Gaussian bosonic circuit IR.
//
// Modes are 1-based (1..M, M = 2^n). Bit k (1..n) of a mode m is bit k-1 of
// the integer m-1, so bit 1 is the least significant one. Example on M = 8:
// mode 6 has m-1 = 5 = 0b101, i.e. bit1=1, bit2=0, bit3=1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symplectiq/error.hpp"
#include "symplectiq/symplectic.hpp"

namespace symplectiq {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct BitClause {
    std::size_t bit = 1;  // 1..n
    int value = 0;        // 0 or 1

    friend bool operator==(const BitClause &, const BitClause &) = default;
};

/// Conjunction of "bit k equals b" clauses; the empty condition holds for
/// every mode.
struct BitCondition {
    std::vector<BitClause> clauses;

    bool empty() const { return clauses.empty(); }
    bool mentions(std::size_t bit) const;
    /// `mode_index` is 0-based (m - 1).
    bool matches(std::uint64_t mode_index) const;
    std::uint64_t mask() const;
    std::uint64_t value_mask() const;

    friend bool operator==(const BitCondition &, const BitCondition &) = default;
};

/// Bit condition selecting exactly mode `m` (1-based) on n bits.
BitCondition condition_for_mode(std::size_t m, std::size_t n);

namespace gb {

struct Phase {
    std::size_t m = 1;
    double t = 0.0;
    friend bool operator==(const Phase &, const Phase &) = default;
};
struct Beamsplitter {
    std::size_t m = 1;
    std::size_t mp = 2;
    double t = 0.0;
    friend bool operator==(const Beamsplitter &, const Beamsplitter &) = default;
};
struct Squeeze {
    std::size_t m = 1;
    double t = 0.0;
    Sign sign = Sign::Plus;
    friend bool operator==(const Squeeze &, const Squeeze &) = default;
};
struct GlobalPhase {
    BitCondition cond;
    double t = 0.0;
    friend bool operator==(const GlobalPhase &, const GlobalPhase &) = default;
};
struct GlobalBeamsplitter {
    BitCondition cond;
    std::size_t l = 1;
    double t = 0.0;
    friend bool operator==(const GlobalBeamsplitter &, const GlobalBeamsplitter &) = default;
};
struct GlobalSqueeze {
    BitCondition cond;
    double t = 0.0;
    Sign sign = Sign::Plus;
    friend bool operator==(const GlobalSqueeze &, const GlobalSqueeze &) = default;
};
struct Displacement {
    std::size_t m = 1;
    double dq = 0.0;
    double dp = 0.0;
    friend bool operator==(const Displacement &, const Displacement &) = default;
};

}  // namespace gb

using GbGate = std::variant<gb::Phase, gb::Beamsplitter, gb::Squeeze, gb::GlobalPhase,
                            gb::GlobalBeamsplitter, gb::GlobalSqueeze, gb::Displacement>;

bool is_global(const GbGate &g);
bool is_squeeze(const GbGate &g);
const char *gate_name(const GbGate &g);

struct GbCircuit {
    std::size_t modes = 1;
    std::vector<GbGate> gates;

    /// n with modes = 2^n.
    std::size_t bits() const;

    friend bool operator==(const GbCircuit &, const GbCircuit &) = default;
};

struct ValidationIssue {
    std::size_t gate_index = 0;
    ErrorCode code = ErrorCode::InvalidArgument;
    std::string message;
};

/// Every invariant violation in `c`; empty when the circuit is well formed.
/// Displacement gates are structurally valid here.
std::vector<ValidationIssue> validate(const GbCircuit &c);

/// Throws the first validation issue, if any.
void require_valid(const GbCircuit &c);

/// Local gates equivalent to `g` on `modes` modes. Global beamsplitters emit
/// each pair once, ordered (m, m') with bit l of m-1 equal to 0.
std::vector<GbGate> expand_global(const GbGate &g, std::size_t modes);

/// t-independent K such that the gate acts as propagator(K, t).
GeneratorMatrix generator_of(const GbGate &g, std::size_t modes);

/// Time parameter of a gate (Displacement has none and throws).
double gate_time(const GbGate &g);

/// Oracle chain: product of exp(t_i Omega K_i), last gate leftmost.
RealMatrix circuit_propagator(const GbCircuit &c);

/// Oracle chain applied to a moment vector.
MomentVector propagate_mean(const GbCircuit &c, const MomentVector &z);

}  // namespace symplectiq
