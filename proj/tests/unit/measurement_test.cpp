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

#include "symplectiq/measurement.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "symplectiq/compiler.hpp"
#include "test_util.hpp"

using namespace symplectiq;

namespace {

MomentVector mv(std::initializer_list<double> v) {
    RealVector r(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) r[i++] = x;
    return MomentVector(r);
}

}  // namespace

TEST(measurement, energies) {
    const MomentVector z = mv({1, 0, 2, 0.5});
    EXPECT_EQ(mode_energies(z), (std::vector<double>{2.5, 0.125}));
    EXPECT_EQ(total_energy(mode_energies(z)), 2.625);
    EXPECT_EQ(mode_energies(z, CovarianceMatrix::coherent(2)), mode_energies(z));
    RealMatrix s = 0.5 * RealMatrix::Identity(4, 4);
    s(0, 0) = 1.5;
    EXPECT_EQ(mode_energies(z, CovarianceMatrix(s))[0], 3.0);
    EXPECT_THROW(mode_energies(z, CovarianceMatrix::coherent(1)), Error);
}

TEST(measurement, photon_counts_depend_on_seed_and_mode_only) {
    const MomentVector z = mv({1, 2, 3, 0, 0, 0.5, 1, 0});
    const PhotonCountSample a = sample_photon_counts(z, 17);
    const PhotonCountSample b = sample_photon_counts(z, 17);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.seed, 17u);
    // Changing mode 3 leaves modes 1 and 2 untouched.
    const PhotonCountSample c = sample_photon_counts(mv({1, 2, 7, 0, 0, 0.5, 1, 0}), 17);
    EXPECT_EQ(c.counts[0], a.counts[0]);
    EXPECT_EQ(c.counts[1], a.counts[1]);
    EXPECT_EQ(sample_photon_counts(mv({0, 0}), 1).counts, (std::vector<std::uint64_t>{0}));
}

TEST(measurement, photon_count_statistics) {
    const MomentVector z = mv({1.0, 3.0, 0.2, 5.0, 0.0, -0.4, 1.0, 0.0});
    const auto e = mode_energies(z);
    const int draws = 100000;
    std::vector<double> sum(e.size(), 0.0);
    for (int i = 0; i < draws; ++i) {
        const auto s = sample_photon_counts(z, static_cast<std::uint64_t>(i));
        for (std::size_t m = 0; m < e.size(); ++m) sum[m] += static_cast<double>(s.counts[m]);
    }
    for (std::size_t m = 0; m < e.size(); ++m) {
        const double se = std::sqrt(e[m] / draws);
        EXPECT_NEAR(sum[m] / draws, e[m], 3 * se + 1e-12) << m;
    }
}

TEST(measurement, homodyne_moments_examples) {
    const MomentVector z = mv({1.0, 0.0, 0.0, 2.0});
    const auto sigma = CovarianceMatrix::coherent(2);
    const HomodyneMoments q = homodyne_moments(z, sigma, 1, 0.0);
    EXPECT_EQ(q.mean, 1.0);
    EXPECT_EQ(q.variance, 0.5);
    const HomodyneMoments p = homodyne_moments(z, sigma, 2, std::numbers::pi / 2);
    EXPECT_NEAR(p.mean, 2.0, 1e-15);
    EXPECT_NEAR(p.variance, 0.5, 1e-15);
    EXPECT_THROW(homodyne_moments(z, sigma, 3, 0.0), Error);
}

TEST(measurement, homodyne_statistics) {
    const MomentVector z = mv({0.7, -1.1, 0.3, 2.0});
    const auto sigma = CovarianceMatrix::coherent(2);
    for (std::size_t mode : {1, 2}) {
        for (double theta : {0.0, 0.9}) {
            const auto mom = homodyne_moments(z, sigma, mode, theta);
            const std::size_t count = 100000;
            const auto xs = sample_homodyne_many(z, sigma, mode, theta, 8, count);
            double sum = 0.0, sq = 0.0;
            for (double x : xs) sum += x;
            const double mean = sum / count;
            for (double x : xs) sq += (x - mean) * (x - mean);
            const double var = sq / (count - 1);
            EXPECT_NEAR(mean, mom.mean, 3 * std::sqrt(0.5 / count));
            EXPECT_NEAR(var, 0.5, 3 * 0.5 * std::sqrt(2.0 / (count - 1)));
            EXPECT_EQ(sample_homodyne(z, sigma, mode, theta, 8), xs.front());
        }
    }
}

TEST(measurement, fractions) {
    const ScaledState s = encode_mean(mv({3, 0, 0, 4}));
    EXPECT_NEAR(symplectic_fraction(s), 9.0 / 25.0, 1e-15);
    EXPECT_NEAR(register_halves_fraction(s), 9.0 / 25.0, 1e-15);
    EXPECT_EQ(register_halves_fraction(encode_mean(mv({1, 2}))), 1.0);
}

TEST(measurement_properties, interferometers_conserve_energy) {
    Philox4x32 rng(12);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = testutil::pick(rng, 1, 4);
        const GbCircuit c = testutil::random_pp_circuit(rng, n, 25);
        const MomentVector z = testutil::random_moments(rng, c.modes);
        const RunResult r = run(compile(c), encode_mean(z));
        EXPECT_NEAR(total_energy(mode_energies(decode_mean(r.state))), total_energy(mode_energies(z)), 1e-10);
    }
}

TEST(measurement_properties, beamsplitters_keep_symplectic_fraction) {
    Philox4x32 rng(13);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = testutil::pick(rng, 1, 4);
        GbCircuit c;
        c.modes = std::size_t{1} << n;
        for (int g = 0; g < 15; ++g) {
            const std::size_t l = testutil::pick(rng, 1, n);
            c.gates.push_back(gb::GlobalBeamsplitter{testutil::random_condition(rng, n, l), l, testutil::uniform(rng, -1, 1)});
        }
        const ScaledState s0 = encode_mean(testutil::random_moments(rng, c.modes));
        const RunResult r = run(compile(c), s0);
        EXPECT_NEAR(symplectic_fraction(r.state), symplectic_fraction(s0), 1e-12);
    }
}
