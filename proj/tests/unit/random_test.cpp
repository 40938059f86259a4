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

#include "symplectiq/random.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"

using namespace symplectiq;

TEST(philox, known_answers) {
    EXPECT_EQ(Philox4x32::generate({0, 0, 0, 0}, {0, 0}),
              (Philox4x32::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (Philox4x32::Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(philox, stream_layout) {
    Philox4x32 rng(0x0000000200000001ULL, 0x0000000400000003ULL);
    const auto expect = Philox4x32::generate({0, 0, 3, 4}, {1, 2});
    for (auto w : expect) EXPECT_EQ(rng.next_u32(), w);
    const auto next = Philox4x32::generate({1, 0, 3, 4}, {1, 2});
    EXPECT_EQ(rng.next_u32(), next[0]);
}

TEST(philox, reproducible_and_distinct_streams) {
    Philox4x32 a(42), b(42), c(42, 1), d(43);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 100; ++i) {
        va.push_back(a.next_u64());
        vb.push_back(b.next_u64());
        vc.push_back(c.next_u64());
        vd.push_back(d.next_u64());
    }
    EXPECT_EQ(va, vb);
    EXPECT_NE(va, vc);
    EXPECT_NE(va, vd);
}

TEST(philox, uniform_open_interval) {
    Philox4x32 rng(7);
    double sum = 0.0;
    const int count = 100000;
    for (int i = 0; i < count; ++i) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / count, 0.5, 3 * std::sqrt(1.0 / 12 / count));
}

TEST(samplers, poisson_edge_cases) {
    Philox4x32 rng(1);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(sample_poisson(rng, 0.0), 0u);
    EXPECT_THROW(sample_poisson(rng, -1.0), std::exception);
    EXPECT_THROW(sample_poisson(rng, std::nan("")), std::exception);
}

TEST(samplers, frozen_draws) {
    Philox4x32 a(2024);
    std::vector<std::uint64_t> got;
    for (double lambda : {0.5, 3.0, 9.9, 10.0, 55.0, 1e4}) got.push_back(sample_poisson(a, lambda));
    EXPECT_EQ(got, (std::vector<std::uint64_t>{0, 1, 9, 10, 41, 9924}));
    Philox4x32 b(2024);
    EXPECT_DOUBLE_EQ(sample_standard_normal(b), 1.402940144741275);
    Philox4x32 c(2024);
    EXPECT_DOUBLE_EQ(c.uniform(), 0.26856328700755022);
    EXPECT_EQ(Philox4x32(2024).next_u32(), 2592828275u);
}

class PoissonMoments : public ::testing::TestWithParam<double> {};

TEST_P(PoissonMoments, mean_and_variance) {
    const double lambda = GetParam();
    Philox4x32 rng(static_cast<std::uint64_t>(lambda * 1000) + 11);
    const int count = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < count; ++i) {
        const double k = static_cast<double>(sample_poisson(rng, lambda));
        sum += k;
        sq += k * k;
    }
    const double mean = sum / count;
    const double var = sq / count - mean * mean;
    EXPECT_NEAR(mean, lambda, 4 * std::sqrt(lambda / count));
    EXPECT_NEAR(var / lambda, 1.0, 0.03);
}

INSTANTIATE_TEST_SUITE_P(samplers, PoissonMoments, ::testing::Values(0.3, 2.0, 9.5, 10.0, 30.0, 400.0));

TEST(samplers, poisson_small_lambda_pmf) {
    Philox4x32 rng(5);
    const double lambda = 1.5;
    const int count = 200000;
    std::vector<int> hist(8, 0);
    for (int i = 0; i < count; ++i) {
        const auto k = sample_poisson(rng, lambda);
        if (k < hist.size()) ++hist[k];
    }
    double pmf = std::exp(-lambda);
    for (std::size_t k = 0; k < 5; ++k) {
        const double se = std::sqrt(pmf * (1 - pmf) / count);
        EXPECT_NEAR(hist[k] / static_cast<double>(count), pmf, 4 * se) << k;
        pmf *= lambda / static_cast<double>(k + 1);
    }
}

TEST(samplers, normal_moments) {
    Philox4x32 rng(99);
    const int count = 100000;
    double sum = 0.0, sq = 0.0, fourth = 0.0;
    for (int i = 0; i < count; ++i) {
        const double x = sample_standard_normal(rng);
        sum += x;
        sq += x * x;
        fourth += x * x * x * x;
    }
    EXPECT_NEAR(sum / count, 0.0, 4 / std::sqrt(count));
    EXPECT_NEAR(sq / count, 1.0, 4 * std::sqrt(2.0 / count));
    EXPECT_NEAR(fourth / count, 3.0, 0.15);
}
