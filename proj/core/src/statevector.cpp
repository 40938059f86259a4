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

#include "symplectiq/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symplectiq::kernels {

namespace {

constexpr std::size_t kChunk = std::size_t{1} << 14;
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;

std::atomic<int> g_threads{0};

int env_threads() {
    const char *env = std::getenv("SYMPLECTIQ_THREADS");
    if (env == nullptr) return 0;
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    return (end != env && v > 0) ? static_cast<int>(v) : 0;
}

int thread_count() {
    int t = g_threads.load(std::memory_order_relaxed);
    if (t > 0) return t;
    static const int from_env = env_threads();
    if (from_env > 0) return from_env;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Sorted bit positions to spread a compact counter over.
struct Spreader {
    std::size_t positions[64];
    std::size_t count = 0;

    explicit Spreader(std::uint64_t free_bits_mask) {
        while (free_bits_mask != 0) {
            positions[count++] = static_cast<std::size_t>(std::countr_zero(free_bits_mask));
            free_bits_mask &= free_bits_mask - 1;
        }
    }

    // Inserts a zero at each position, ascending.
    std::uint64_t operator()(std::uint64_t k) const {
        for (std::size_t j = 0; j < count; ++j) {
            const std::size_t p = positions[j];
            const std::uint64_t low = k & ((std::uint64_t{1} << p) - 1);
            k = ((k >> p) << (p + 1)) | low;
        }
        return k;
    }
};

std::int64_t iterations(std::size_t size, std::uint64_t fixed_mask) {
    return static_cast<std::int64_t>(size >> std::popcount(fixed_mask));
}

}  // namespace

void set_max_threads(int threads) { g_threads.store(std::max(0, threads), std::memory_order_relaxed); }

int max_threads() { return thread_count(); }

void controlled_ry(std::span<double> a, Selector sel, std::size_t target, double theta) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t fixed = sel.mask | tbit;
    const Spreader spread(fixed);
    const std::uint64_t base = sel.value & ~tbit;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::int64_t count = iterations(a.size(), fixed);
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t i0 = spread(static_cast<std::uint64_t>(k)) | base;
        const std::uint64_t i1 = i0 | tbit;
        const double x0 = data[i0];
        const double x1 = data[i1];
        data[i0] = c * x0 - s * x1;
        data[i1] = s * x0 + c * x1;
    }
}

void controlled_x(std::span<double> a, Selector sel, std::size_t target) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t fixed = sel.mask | tbit;
    const Spreader spread(fixed);
    const std::uint64_t base = sel.value & ~tbit;
    const std::int64_t count = iterations(a.size(), fixed);
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t i0 = spread(static_cast<std::uint64_t>(k)) | base;
        std::swap(data[i0], data[i0 | tbit]);
    }
}

void scale_selected(std::span<double> a, Selector sel, double factor) {
    const Spreader spread(sel.mask);
    const std::int64_t count = iterations(a.size(), sel.mask);
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        data[spread(static_cast<std::uint64_t>(k)) | sel.value] *= factor;
    }
}

void reflect_unmatched(std::span<double> a, Selector ctrl, Selector pattern) {
    const Spreader spread(ctrl.mask);
    const std::int64_t count = iterations(a.size(), ctrl.mask);
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t i = spread(static_cast<std::uint64_t>(k)) | ctrl.value;
        if ((i & pattern.mask) != pattern.value) data[i] = -data[i];
    }
}

void apply_two_bit(std::span<double> a, std::size_t lo, std::size_t hi, const double (&m)[16]) {
    const std::uint64_t blo = std::uint64_t{1} << lo;
    const std::uint64_t bhi = std::uint64_t{1} << hi;
    const Spreader spread(blo | bhi);
    const std::int64_t count = iterations(a.size(), blo | bhi);
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t i0 = spread(static_cast<std::uint64_t>(k));
        const std::uint64_t idx[4] = {i0, i0 | blo, i0 | bhi, i0 | blo | bhi};
        const double x[4] = {data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            data[idx[r]] = m[4 * r] * x[0] + m[4 * r + 1] * x[1] + m[4 * r + 2] * x[2] + m[4 * r + 3] * x[3];
        }
    }
}

double norm_squared(std::span<const double> a) {
    const std::size_t chunks = (a.size() + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    const double *data = a.data();
    const std::size_t size = a.size();
    const auto n_chunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (n_chunks >= 4)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(size, begin + kChunk);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += data[i] * data[i];
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

void scale(std::span<double> a, double factor) {
    const auto size = static_cast<std::int64_t>(a.size());
    double *data = a.data();
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (size >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) data[i] *= factor;
}

}  // namespace symplectiq::kernels
