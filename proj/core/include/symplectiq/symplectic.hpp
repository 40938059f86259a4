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

// Dense phase-space reference for Gaussian bosonic dynamics.
//
// Quadratures are ordered z = (q_1..q_M, p_1..p_M). A quadratic Hamiltonian
// H = 1/2 z^T K z moves the first moments by the propagator exp(t Omega K)
// with Omega = [[0, I], [-I, 0]]. Everything here is intentionally dense and
// limited to kMaxOracleModes; it is the ground truth the compiled qubit
// circuits are checked against.

#include <cstddef>

#include <Eigen/Dense>

namespace symplectiq {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxOracleModes = 64;

/// True when `m` is a positive power of two (1, 2, 4, ...).
constexpr bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

/// Expectation values of the quadratures, ordered (q_1..q_M, p_1..p_M).
class MomentVector {
public:
    explicit MomentVector(RealVector entries);
    static MomentVector zeros(std::size_t modes);

    std::size_t modes() const { return static_cast<std::size_t>(entries_.size()) / 2; }
    const RealVector &entries() const { return entries_; }

    // Mode indices are 0-based here.
    double q(std::size_t mode) const { return entries_[static_cast<Eigen::Index>(mode)]; }
    double p(std::size_t mode) const { return entries_[static_cast<Eigen::Index>(mode + modes())]; }
    void set_q(std::size_t mode, double value);
    void set_p(std::size_t mode, double value);

    double norm() const { return entries_.norm(); }

    friend bool operator==(const MomentVector &a, const MomentVector &b) {
        return a.entries_ == b.entries_;
    }

private:
    RealVector entries_;
};

/// Symmetric 2M x 2M covariance of the quadratures.
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(RealMatrix entries);
    /// Covariance of a coherent state (vacuum noise), sigma = I / 2.
    static CovarianceMatrix coherent(std::size_t modes);

    std::size_t modes() const { return static_cast<std::size_t>(entries_.rows()) / 2; }
    const RealMatrix &entries() const { return entries_; }

    double min_eigenvalue() const;
    bool is_positive_definite() const { return min_eigenvalue() > 0.0; }

private:
    RealMatrix entries_;
};

enum class GeneratorKind { ParticlePreserving, NonParticlePreserving, Mixed };

const char *generator_kind_name(GeneratorKind kind);

/// Real symmetric K of H = 1/2 z^T K z, tagged with its class.
class GeneratorMatrix {
public:
    /// Validates symmetry and classifies through the commutator test.
    explicit GeneratorMatrix(RealMatrix k);
    GeneratorMatrix(RealMatrix k, GeneratorKind kind);

    static GeneratorMatrix zero(std::size_t modes);

    std::size_t modes() const { return static_cast<std::size_t>(k_.rows()) / 2; }
    const RealMatrix &matrix() const { return k_; }
    GeneratorKind kind() const { return kind_; }

    GeneratorMatrix operator+(const GeneratorMatrix &other) const;

private:
    RealMatrix k_;
    GeneratorKind kind_;
};

/// Element of Sp(2M, R); always produced by `propagator`.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(RealMatrix q) : q_(std::move(q)) {}

    const RealMatrix &matrix() const { return q_; }
    std::size_t modes() const { return static_cast<std::size_t>(q_.rows()) / 2; }

    /// max |Q Omega Q^T - Omega|.
    double symplectic_defect() const;

private:
    RealMatrix q_;
};

/// Omega = iY (x) 1_M = [[0, I], [-I, 0]].
RealMatrix build_omega(std::size_t modes);

/// K for H = sum_{mm'} h_{mm'} a_m^dag a_m' + Tr(h)/2, i.e.
/// K = [[Re h, -Im h], [Im h, Re h]].
GeneratorMatrix k_from_particle_preserving(const ComplexMatrix &h);

/// K for H = sum_{mm'} conj(D_{mm'}) a_m a_m' + D_{mm'} a_m^dag a_m'^dag, i.e.
/// K = 2 [[Re D, Im D], [Im D, -Re D]].
GeneratorMatrix k_from_non_particle_preserving(const ComplexMatrix &delta);

/// ParticlePreserving iff [Omega, K] vanishes, NonParticlePreserving iff
/// {Omega, K} vanishes, both at 1e-10 * max|K|.
GeneratorKind classify_generator(const RealMatrix &k);
inline GeneratorKind classify_generator(const GeneratorMatrix &k) {
    return classify_generator(k.matrix());
}

/// exp(t Omega K) by scaling and squaring.
SymplecticMatrix propagator(const GeneratorMatrix &k, double t);

MomentVector evolve_mean(const MomentVector &z, const GeneratorMatrix &k, double t);

/// sigma(t) = Q sigma Q^T for particle-preserving K (Q orthogonal) and
/// Q sigma Q for non-particle-preserving K (Q symmetric). Mixed generators
/// throw MixedGeneratorUnsupported.
CovarianceMatrix evolve_cov(const CovarianceMatrix &sigma, const GeneratorMatrix &k, double t);

}  // namespace symplectiq
