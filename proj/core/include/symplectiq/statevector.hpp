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

// Real-amplitude statevector kernels. Bits are basis-index bit positions,
// not qubit labels (see bit_position). Every kernel is deterministic for a
// fixed input regardless of the thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symplectiq::kernels {

/// Basis states with (index & mask) == value.
struct Selector {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

/// Caps OpenMP parallelism of the kernels; 0 restores the default (the
/// SYMPLECTIQ_THREADS environment variable, else the OpenMP default).
void set_max_threads(int threads);
int max_threads();

/// Ry(theta) on `target` for every pair whose other bits match `sel`.
void controlled_ry(std::span<double> a, Selector sel, std::size_t target, double theta);
void controlled_x(std::span<double> a, Selector sel, std::size_t target);
/// Multiplies the selected entries by `factor`.
void scale_selected(std::span<double> a, Selector sel, double factor);
/// Negates entries where `ctrl` matches and `pattern` does not.
void reflect_unmatched(std::span<double> a, Selector ctrl, Selector pattern);
/// Applies the 4x4 row-major matrix `m` to bits (lo, hi), local index
/// 2*bit_hi + bit_lo.
void apply_two_bit(std::span<double> a, std::size_t lo, std::size_t hi, const double (&m)[16]);

/// Sum of squares over fixed-size chunks, added in order.
double norm_squared(std::span<const double> a);
void scale(std::span<double> a, double factor);

}  // namespace symplectiq::kernels
