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

// Pauli-string view of 2M x 2M real matrices (M = 2^n) on n+1 qubits.
//
// Letter 0 is the symplectic-qubit factor and is the most significant tensor
// factor, matching the (q-block, p-block) ordering of phase space.
//
// A PauliSum stores real coefficients against the "real form" of each
// string, R_P = i^(#Y mod 2) P, which is a real orthogonal matrix. Under this
// convention iY, i(1 (x) P_a), X (x) P_s and Z (x) P_s all carry coefficient
// +1, and every real matrix has a real expansion.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symplectiq/symplectic.hpp"

namespace symplectiq {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::size_t kMaxDensePauliQubits = 7;  // n <= 6 register qubits

class PauliString {
public:
    PauliString() = default;
    /// `letters` over {I,X,Y,Z} (also accepts '_' for I). `phase` is the
    /// exponent k of i^k.
    explicit PauliString(std::string_view letters, int phase = 0);
    PauliString(std::size_t size, std::uint64_t x_mask, std::uint64_t z_mask, int phase = 0);

    std::size_t size() const { return size_; }
    Pauli letter(std::size_t j) const;
    /// Exponent k in {0,1,2,3} of the i^k prefactor.
    int phase() const { return phase_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }

    std::size_t y_count() const;
    /// Even number of Y letters <=> the plain string is a real symmetric matrix.
    bool is_symmetric() const { return y_count() % 2 == 0; }
    bool is_identity() const { return x_ == 0 && z_ == 0; }

    PauliString with_phase(int phase) const { return PauliString(size_, x_, z_, phase); }
    PauliString without_phase() const { return with_phase(0); }

    /// Dense complex matrix including the phase.
    ComplexMatrix to_dense() const;

    /// "+iXYZ" style rendering.
    std::string str() const;
    std::string letters() const;

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.size_ == b.size_ && a.x_ == b.x_ && a.z_ == b.z_ && a.phase_ == b.phase_;
    }
    friend bool operator<(const PauliString &a, const PauliString &b);

private:
    std::size_t size_ = 0;
    // Letter j lives in bit (size - 1 - j) of the masks, i.e. the same bit it
    // addresses in a basis-state index.
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    int phase_ = 0;
};

/// Letterwise product with accumulated phase.
PauliString multiply(const PauliString &a, const PauliString &b);

class PauliSum {
public:
    static constexpr double kDropTolerance = 1e-12;

    PauliSum() = default;
    explicit PauliSum(std::size_t qubits) : qubits_(qubits) {}

    /// Single term built from a (possibly phased) string; the phase must make
    /// the string a real matrix.
    static PauliSum from_string(const PauliString &p, double coefficient = 1.0);

    std::size_t qubits() const { return qubits_; }
    const std::map<PauliString, double> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds `coefficient` * R_P for the phase-free key P.
    void add(const PauliString &key, double coefficient);
    double coefficient(const PauliString &key) const;

    PauliSum operator+(const PauliSum &other) const;
    PauliSum operator-(const PauliSum &other) const;
    PauliSum operator*(const PauliSum &other) const;
    PauliSum scaled(double factor) const;

    RealMatrix to_dense() const;
    std::string str() const;

    friend bool operator==(const PauliSum &a, const PauliSum &b) {
        return a.qubits_ == b.qubits_ && a.terms_ == b.terms_;
    }

private:
    std::size_t qubits_ = 0;
    std::map<PauliString, double> terms_;
};

/// Real form R_P = i^(#Y mod 2) P as a dense matrix.
RealMatrix real_form_dense(const PauliString &key);

/// Coefficient c such that `p` (with its phase) equals c * R_P. Throws when
/// `p` is not a real matrix.
double real_form_coefficient(const PauliString &p);

PauliSum commutator(const PauliSum &a, const PauliSum &b);

/// Expansion of a real 2^N x 2^N matrix, terms below kDropTolerance removed.
PauliSum pauli_decompose(const RealMatrix &m);

/// Orthogonal basis of sp(2M, R), M = 2^n:
/// i{Y (x) P_s} u i{1 (x) P_a} u {X (x) P_s} u {Z (x) P_s}. Size M(2M+1).
std::vector<PauliString> sp_basis(std::size_t n);

enum class PauliGeneratorClass { RealTime, ImaginaryTime, Mixed };

const char *pauli_class_name(PauliGeneratorClass c);

/// RealTime iff every term is iY (x) P_s or i 1 (x) P_a (anti-Hermitian
/// Omega K), ImaginaryTime iff every term is X (x) P_s or Z (x) P_s.
PauliGeneratorClass classify_pauli_generator(const PauliSum &omega_k);

}  // namespace symplectiq
