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

// Counter-based random numbers: Philox4x32-10 keyed by a 64-bit seed, with
// a 64-bit stream id in the upper counter words. Output is identical on
// every platform, and so are the derived samplers below (they use only
// IEEE arithmetic and the C math library).

#include <array>
#include <cstdint>

namespace symplectiq {

class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0);

    /// The raw bijection: 10 rounds on `counter` under `key`.
    static Block generate(Block counter, std::array<std::uint32_t, 2> key);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform();

private:
    std::array<std::uint32_t, 2> key_;
    Block counter_;
    Block buffer_{};
    int used_ = 4;
};

/// Poisson(lambda): inversion below 10, Hormann's PTRS transformed
/// rejection above.
std::uint64_t sample_poisson(Philox4x32 &rng, double lambda);

/// Standard normal via Box-Muller (cosine branch only).
double sample_standard_normal(Philox4x32 &rng);

}  // namespace symplectiq
