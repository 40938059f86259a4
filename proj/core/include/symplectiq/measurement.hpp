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

// Measurement layer: mode energies, photon counting and homodyne samples,
// and the qubit-register fractions of an encoded state. Units have hbar = 1
// so a coherent state has sigma = I/2 and homodyne variance 1/2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symplectiq/simulator.hpp"
#include "symplectiq/symplectic.hpp"

namespace symplectiq {

/// e_m = (q_m^2 + p_m^2) / 2 (coherent states).
std::vector<double> mode_energies(const MomentVector &z);
/// e_m = (sigma_qq + sigma_pp + q_m^2 + p_m^2) / 2 - 1/2.
std::vector<double> mode_energies(const MomentVector &z, const CovarianceMatrix &sigma);
double total_energy(const std::vector<double> &energies);

struct PhotonCountSample {
    std::vector<std::uint64_t> counts;  // index m-1
    std::uint64_t seed = 0;
};

/// Independent Poisson(e_m) per mode. Mode m draws from the Philox stream
/// (seed, m-1), so a sample depends only on the seed and that mode's energy.
PhotonCountSample sample_photon_counts(const MomentVector &z, std::uint64_t seed);

/// Mean cos(theta) q_m + sin(theta) p_m and variance u^T sigma_m u with
/// u = (cos theta, sin theta) for mode m (1-based).
struct HomodyneMoments {
    double mean = 0.0;
    double variance = 0.5;
};
HomodyneMoments homodyne_moments(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode,
                                 double theta);

/// One draw from Philox stream (seed, 2^32 + m - 1).
double sample_homodyne(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode, double theta,
                       std::uint64_t seed);
/// `count` consecutive draws from the same stream.
std::vector<double> sample_homodyne_many(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode,
                                         double theta, std::uint64_t seed, std::size_t count);

/// Probability of the symplectic qubit reading 0: sum q^2 / sum (q^2 + p^2).
double symplectic_fraction(const ScaledState &s);
/// Probability of the most significant register qubit reading 0, i.e. the
/// energy fraction of modes 1..M/2 (1 when M = 1).
double register_halves_fraction(const ScaledState &s);

}  // namespace symplectiq
