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

#include "symplectiq/symplectic.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "symplectiq/error.hpp"

namespace symplectiq {

namespace {

constexpr double kStructuralTol = 1e-12;

void require_modes(std::size_t modes) {
    if (modes == 0) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be at least 1");
    }
    if (modes > kMaxOracleModes) {
        throw Error(ErrorCode::CapacityExceeded,
                    "dense phase-space oracle is limited to " + std::to_string(kMaxOracleModes) +
                        " modes, got " + std::to_string(modes));
    }
}

void require_square_even(const RealMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + " must be a non-empty 2M x 2M matrix");
    }
}

double max_abs(const RealMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool symmetric_within(const RealMatrix &m, double tol) {
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.transpose()) <= tol * scale;
}

}  // namespace

MomentVector::MomentVector(RealVector entries) : entries_(std::move(entries)) {
    if (entries_.size() == 0 || entries_.size() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch, "moment vector length must be 2M");
    }
    if (!is_power_of_two(modes())) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be a power of two");
    }
    if (!entries_.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "moment vector entries must be finite");
    }
}

MomentVector MomentVector::zeros(std::size_t modes) {
    return MomentVector(RealVector::Zero(static_cast<Eigen::Index>(2 * modes)));
}

void MomentVector::set_q(std::size_t mode, double value) {
    if (mode >= modes() || !std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, "bad q assignment");
    }
    entries_[static_cast<Eigen::Index>(mode)] = value;
}

void MomentVector::set_p(std::size_t mode, double value) {
    if (mode >= modes() || !std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, "bad p assignment");
    }
    entries_[static_cast<Eigen::Index>(mode + modes())] = value;
}

CovarianceMatrix::CovarianceMatrix(RealMatrix entries) : entries_(std::move(entries)) {
    require_square_even(entries_, "covariance matrix");
    if (!is_power_of_two(modes())) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be a power of two");
    }
    if (!entries_.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "covariance entries must be finite");
    }
    if (!symmetric_within(entries_, kStructuralTol)) {
        throw Error(ErrorCode::NonSymmetricInput, "covariance matrix must be symmetric");
    }
}

CovarianceMatrix CovarianceMatrix::coherent(std::size_t modes) {
    const auto d = static_cast<Eigen::Index>(2 * modes);
    return CovarianceMatrix(0.5 * RealMatrix::Identity(d, d));
}

double CovarianceMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

const char *generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::ParticlePreserving: return "particle-preserving";
        case GeneratorKind::NonParticlePreserving: return "non-particle-preserving";
        case GeneratorKind::Mixed: return "mixed";
    }
    return "unknown";
}

GeneratorMatrix::GeneratorMatrix(RealMatrix k) : k_(std::move(k)), kind_(GeneratorKind::Mixed) {
    require_square_even(k_, "generator");
    require_modes(modes());
    if (!k_.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "generator entries must be finite");
    }
    if (!symmetric_within(k_, kStructuralTol)) {
        throw Error(ErrorCode::NonSymmetricInput, "generator K must be symmetric");
    }
    kind_ = classify_generator(k_);
}

GeneratorMatrix::GeneratorMatrix(RealMatrix k, GeneratorKind kind) : GeneratorMatrix(std::move(k)) {
    // A zero (or otherwise doubly-classified) K satisfies both bracket tests;
    // the declared kind wins as long as it is not contradicted.
    const RealMatrix omega = build_omega(modes());
    const double tol = 1e-10 * std::max(1.0, max_abs(k_));
    const bool commutes = max_abs(omega * k_ - k_ * omega) <= tol;
    const bool anticommutes = max_abs(omega * k_ + k_ * omega) <= tol;
    const bool ok = (kind == GeneratorKind::ParticlePreserving && commutes) ||
                    (kind == GeneratorKind::NonParticlePreserving && anticommutes) ||
                    (kind == GeneratorKind::Mixed && !commutes && !anticommutes);
    if (!ok) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("declared generator kind ") + generator_kind_name(kind) +
                        " contradicts the bracket test");
    }
    kind_ = kind;
}

GeneratorMatrix GeneratorMatrix::zero(std::size_t modes) {
    const auto d = static_cast<Eigen::Index>(2 * modes);
    return GeneratorMatrix(RealMatrix::Zero(d, d));
}

GeneratorMatrix GeneratorMatrix::operator+(const GeneratorMatrix &other) const {
    if (other.modes() != modes()) {
        throw Error(ErrorCode::DimensionMismatch, "generator sizes differ");
    }
    return GeneratorMatrix(k_ + other.k_);
}

double SymplecticMatrix::symplectic_defect() const {
    const RealMatrix omega = build_omega(modes());
    return max_abs(q_ * omega * q_.transpose() - omega);
}

RealMatrix build_omega(std::size_t modes) {
    require_modes(modes);
    const auto m = static_cast<Eigen::Index>(modes);
    RealMatrix omega = RealMatrix::Zero(2 * m, 2 * m);
    omega.topRightCorner(m, m).setIdentity();
    omega.bottomLeftCorner(m, m) = -RealMatrix::Identity(m, m);
    return omega;
}

GeneratorMatrix k_from_particle_preserving(const ComplexMatrix &h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "h must be a non-empty square matrix");
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kStructuralTol * scale) {
        throw Error(ErrorCode::NonHermitianInput, "h must be Hermitian");
    }
    const auto m = h.rows();
    require_modes(static_cast<std::size_t>(m));
    const RealMatrix re = h.real();
    const RealMatrix im = h.imag();
    RealMatrix k(2 * m, 2 * m);
    k.topLeftCorner(m, m) = re;
    k.topRightCorner(m, m) = -im;
    k.bottomLeftCorner(m, m) = im;
    k.bottomRightCorner(m, m) = re;
    // Re h is symmetric and Im h antisymmetric up to the tolerance; remove the residue.
    k = 0.5 * (k + k.transpose()).eval();
    return GeneratorMatrix(std::move(k), GeneratorKind::ParticlePreserving);
}

GeneratorMatrix k_from_non_particle_preserving(const ComplexMatrix &delta) {
    if (delta.rows() != delta.cols() || delta.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "delta must be a non-empty square matrix");
    }
    const double scale = std::max(1.0, delta.cwiseAbs().maxCoeff());
    if ((delta - delta.transpose()).cwiseAbs().maxCoeff() > kStructuralTol * scale) {
        throw Error(ErrorCode::NonSymmetricInput, "delta must be symmetric");
    }
    const auto m = delta.rows();
    require_modes(static_cast<std::size_t>(m));
    const RealMatrix re = delta.real();
    const RealMatrix im = delta.imag();
    RealMatrix k(2 * m, 2 * m);
    k.topLeftCorner(m, m) = 2.0 * re;
    k.topRightCorner(m, m) = 2.0 * im;
    k.bottomLeftCorner(m, m) = 2.0 * im;
    k.bottomRightCorner(m, m) = -2.0 * re;
    k = 0.5 * (k + k.transpose()).eval();
    return GeneratorMatrix(std::move(k), GeneratorKind::NonParticlePreserving);
}

GeneratorKind classify_generator(const RealMatrix &k) {
    require_square_even(k, "generator");
    const RealMatrix omega = build_omega(static_cast<std::size_t>(k.rows()) / 2);
    const double tol = 1e-10 * max_abs(k);
    if (max_abs(omega * k - k * omega) <= tol) {
        return GeneratorKind::ParticlePreserving;
    }
    if (max_abs(omega * k + k * omega) <= tol) {
        return GeneratorKind::NonParticlePreserving;
    }
    return GeneratorKind::Mixed;
}

SymplecticMatrix propagator(const GeneratorMatrix &k, double t) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::InvalidArgument, "propagation time must be finite");
    }
    const RealMatrix omega = build_omega(k.modes());
    const RealMatrix a = t * (omega * k.matrix());
    return SymplecticMatrix(a.exp());
}

MomentVector evolve_mean(const MomentVector &z, const GeneratorMatrix &k, double t) {
    if (z.modes() != k.modes()) {
        throw Error(ErrorCode::DimensionMismatch, "moment vector and generator sizes differ");
    }
    return MomentVector(propagator(k, t).matrix() * z.entries());
}

CovarianceMatrix evolve_cov(const CovarianceMatrix &sigma, const GeneratorMatrix &k, double t) {
    if (sigma.modes() != k.modes()) {
        throw Error(ErrorCode::DimensionMismatch, "covariance and generator sizes differ");
    }
    const GeneratorKind kind = classify_generator(k);
    if (kind == GeneratorKind::Mixed) {
        throw Error(ErrorCode::MixedGeneratorUnsupported,
                    "covariance evolution needs a particle-preserving or non-particle-preserving generator");
    }
    const RealMatrix q = propagator(k, t).matrix();
    RealMatrix out = kind == GeneratorKind::ParticlePreserving
                         ? RealMatrix(q * sigma.entries() * q.transpose())
                         : RealMatrix(q * sigma.entries() * q);
    out = 0.5 * (out + out.transpose()).eval();
    return CovarianceMatrix(std::move(out));
}

}  // namespace symplectiq
