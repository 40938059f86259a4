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
#include <numbers>

#include "gtest/gtest.h"

#include "symplectiq/gb_circuit.hpp"
#include "test_util.hpp"

using namespace symplectiq;
using symplectiq::testutil::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

GeneratorMatrix phase_k(std::size_t m, std::size_t modes) { return generator_of(gb::Phase{m, 0.0}, modes); }

GeneratorMatrix squeeze_k(std::size_t m, std::size_t modes, Sign s = Sign::Plus) {
    return generator_of(gb::Squeeze{m, 0.0, s}, modes);
}

RealMatrix m2(double a, double b, double c, double d) {
    RealMatrix r(2, 2);
    r << a, b, c, d;
    return r;
}

}  // namespace

TEST(symplectic, omega_smallest) { EXPECT_EQ(build_omega(1), m2(0, 1, -1, 0)); }

TEST(symplectic, omega_block_form) {
    RealMatrix expected = RealMatrix::Zero(4, 4);
    expected(0, 2) = expected(1, 3) = 1;
    expected(2, 0) = expected(3, 1) = -1;
    EXPECT_EQ(build_omega(2), expected);
}

TEST(symplectic, omega_squares_to_minus_identity) {
    for (std::size_t m : {1, 2, 4, 8, 64}) {
        const RealMatrix o = build_omega(m);
        EXPECT_EQ(o * o, -RealMatrix::Identity(o.rows(), o.cols()));
        EXPECT_EQ(o.transpose(), -o);
    }
    EXPECT_THROW(build_omega(128), Error);
}

TEST(symplectic, particle_preserving_identity_h) {
    const GeneratorMatrix k = k_from_particle_preserving(ComplexMatrix::Identity(1, 1));
    EXPECT_EQ(k.matrix(), RealMatrix::Identity(2, 2));
    EXPECT_EQ(k.kind(), GeneratorKind::ParticlePreserving);
}

TEST(symplectic, particle_preserving_imaginary_coupling_is_beamsplitter) {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 1) = {0, 1};
    h(1, 0) = {0, -1};
    const GeneratorMatrix k = k_from_particle_preserving(h);
    // q1 p2 - p1 q2 coupling, opposite in sign and half the size of bs(1, 2).
    const RealMatrix bs = generator_of(gb::Beamsplitter{1, 2, 0.0}, 2).matrix();
    EXPECT_EQ(k.matrix(), -0.5 * bs);
    EXPECT_EQ(k.matrix()(0, 3), -1.0);
    EXPECT_EQ(k.matrix()(1, 2), 1.0);
    EXPECT_EQ(k.kind(), GeneratorKind::ParticlePreserving);
}

TEST(symplectic, particle_preserving_zero) {
    EXPECT_EQ(k_from_particle_preserving(ComplexMatrix::Zero(2, 2)).matrix(), RealMatrix::Zero(4, 4));
}

TEST(symplectic, particle_preserving_rejects_non_hermitian) {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 1) = 1.0;
    try {
        k_from_particle_preserving(h);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonHermitianInput);
    }
}

TEST(symplectic, non_particle_preserving_real_delta) {
    const GeneratorMatrix k = k_from_non_particle_preserving(ComplexMatrix::Identity(1, 1));
    EXPECT_EQ(k.matrix(), m2(2, 0, 0, -2));
    EXPECT_EQ(k.kind(), GeneratorKind::NonParticlePreserving);
}

TEST(symplectic, non_particle_preserving_imaginary_delta_is_squeeze) {
    ComplexMatrix d(1, 1);
    d(0, 0) = {0, 1};
    const GeneratorMatrix k = k_from_non_particle_preserving(d);
    EXPECT_EQ(k.matrix(), m2(0, 2, 2, 0));
    EXPECT_EQ(k.matrix(), squeeze_k(1, 1).matrix());
}

TEST(symplectic, non_particle_preserving_zero_and_rejects_asymmetric) {
    EXPECT_EQ(k_from_non_particle_preserving(ComplexMatrix::Zero(2, 2)).matrix(), RealMatrix::Zero(4, 4));
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 1) = 1.0;
    try {
        k_from_non_particle_preserving(d);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonSymmetricInput);
    }
}

TEST(symplectic, classify_examples) {
    EXPECT_EQ(classify_generator(phase_k(2, 4)), GeneratorKind::ParticlePreserving);
    EXPECT_EQ(classify_generator(squeeze_k(2, 4)), GeneratorKind::NonParticlePreserving);
    EXPECT_EQ(classify_generator(phase_k(2, 4) + squeeze_k(2, 4)), GeneratorKind::Mixed);
}

TEST(symplectic, generator_rejects_asymmetric_k) {
    RealMatrix k = RealMatrix::Zero(2, 2);
    k(0, 1) = 1.0;
    EXPECT_THROW(GeneratorMatrix{k}, Error);
}

TEST(symplectic, propagator_at_zero_is_identity) {
    EXPECT_EQ(propagator(phase_k(1, 2), 0.0).matrix(), RealMatrix::Identity(4, 4));
}

TEST(symplectic, phase_quarter_turn) {
    const RealMatrix q = propagator(phase_k(1, 1), kPi / 4).matrix();
    EXPECT_LT(max_abs(q - m2(0, 1, -1, 0)), 1e-15);
}

TEST(symplectic, squeeze_is_diagonal) {
    for (double t : {0.1, -0.3, 0.7}) {
        const RealMatrix q = propagator(squeeze_k(1, 1), t).matrix();
        EXPECT_LT(max_abs(q - m2(std::exp(2 * t), 0, 0, std::exp(-2 * t))), 1e-13);
        const RealMatrix qm = propagator(squeeze_k(1, 1, Sign::Minus), t).matrix();
        EXPECT_LT(max_abs(qm - m2(std::exp(-2 * t), 0, 0, std::exp(2 * t))), 1e-13);
    }
}

TEST(symplectic, evolve_mean_examples) {
    MomentVector z(RealVector::Unit(2, 0));
    const MomentVector out = evolve_mean(z, phase_k(1, 1), kPi / 4);
    EXPECT_NEAR(out.q(0), 0.0, 1e-15);
    EXPECT_NEAR(out.p(0), -1.0, 1e-15);
    EXPECT_EQ(evolve_mean(z, phase_k(1, 1), 0.0), z);
}

TEST(symplectic, beamsplitter_transfers_position) {
    MomentVector z(RealVector::Unit(4, 0));
    const GeneratorMatrix k = generator_of(gb::Beamsplitter{1, 2, 0.0}, 2);
    const MomentVector out = evolve_mean(z, k, kPi / 4);
    EXPECT_NEAR(out.q(0), 0.0, 1e-15);
    EXPECT_NEAR(out.q(1), 1.0, 1e-15);
    EXPECT_NEAR(out.p(0), 0.0, 1e-15);
    EXPECT_NEAR(out.p(1), 0.0, 1e-15);
}

TEST(symplectic, evolve_mean_dimension_mismatch) {
    MomentVector z(RealVector::Unit(4, 0));
    EXPECT_THROW(evolve_mean(z, phase_k(1, 1), 0.1), Error);
}

TEST(symplectic, coherent_state_invariant_under_interferometer) {
    Philox4x32 rng(11);
    const GeneratorMatrix k = k_from_particle_preserving(testutil::random_hermitian(4, rng));
    const CovarianceMatrix out = evolve_cov(CovarianceMatrix::coherent(4), k, 0.83);
    EXPECT_LT(max_abs(out.entries() - 0.5 * RealMatrix::Identity(8, 8)), 1e-14);
}

TEST(symplectic, squeezed_covariance) {
    const double t = 0.2;
    const CovarianceMatrix out = evolve_cov(CovarianceMatrix::coherent(1), squeeze_k(1, 1), t);
    EXPECT_LT(max_abs(out.entries() - m2(std::exp(4 * t) / 2, 0, 0, std::exp(-4 * t) / 2)), 1e-14);
    const CovarianceMatrix same = evolve_cov(out, squeeze_k(1, 1), 0.0);
    EXPECT_EQ(same.entries(), out.entries());
}

TEST(symplectic, mixed_covariance_refused) {
    try {
        evolve_cov(CovarianceMatrix::coherent(1), phase_k(1, 1) + squeeze_k(1, 1), 0.1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedGeneratorUnsupported);
    }
    // Mean evolution still works for mixed generators.
    EXPECT_NO_THROW(evolve_mean(MomentVector(RealVector::Unit(2, 0)), phase_k(1, 1) + squeeze_k(1, 1), 0.1));
}

TEST(symplectic, covariance_rejects_asymmetric) {
    RealMatrix s = RealMatrix::Identity(2, 2);
    s(0, 1) = 0.1;
    EXPECT_THROW(CovarianceMatrix{s}, Error);
}

TEST(symplectic_properties, random_generators) {
    Philox4x32 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t modes = std::size_t{1} << (trial % 4);
        const int which = trial % 3;
        GeneratorMatrix k = which == 0   ? k_from_particle_preserving(testutil::random_hermitian(modes, rng))
                            : which == 1 ? k_from_non_particle_preserving(testutil::random_complex_symmetric(modes, rng))
                                         : k_from_particle_preserving(testutil::random_hermitian(modes, rng)) +
                                               k_from_non_particle_preserving(
                                                   testutil::random_complex_symmetric(modes, rng));
        const double s = testutil::uniform(rng, -0.5, 0.5);
        const double t = testutil::uniform(rng, -0.5, 0.5);
        const SymplecticMatrix qs = propagator(k, s);
        const SymplecticMatrix qt = propagator(k, t);
        const SymplecticMatrix qst = propagator(k, s + t);
        EXPECT_LT(qt.symplectic_defect(), 1e-10);
        EXPECT_LT(max_abs(qst.matrix() - qs.matrix() * qt.matrix()), 1e-10 * std::max(1.0, max_abs(qst.matrix())));
        EXPECT_NEAR(qt.matrix().determinant(), 1.0, 1e-8);
        if (which == 0) {
            const auto d = qt.matrix().rows();
            EXPECT_LT(max_abs(qt.matrix().transpose() * qt.matrix() - RealMatrix::Identity(d, d)), 1e-10);
            const MomentVector z = testutil::random_moments(rng, modes);
            EXPECT_NEAR(evolve_mean(z, k, t).norm(), z.norm(), 1e-10);
        }
        if (which != 2) {
            RealMatrix a = RealMatrix::Random(2 * modes, 2 * modes);
            const CovarianceMatrix sigma(a * a.transpose() + 0.1 * RealMatrix::Identity(2 * modes, 2 * modes));
            const CovarianceMatrix out = evolve_cov(sigma, k, t);
            EXPECT_EQ(out.entries(), out.entries().transpose());
            EXPECT_GT(out.min_eigenvalue(), -1e-10 * out.entries().trace());
            EXPECT_TRUE(out.is_positive_definite());
        } else {
            EXPECT_EQ(k.kind(), GeneratorKind::Mixed);
        }
    }
}
