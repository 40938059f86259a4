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
#include <span>

#include "symplectiq/error.hpp"
#include "symplectiq/random.hpp"
#include "symplectiq/statevector.hpp"

namespace symplectiq {

namespace {

void check_mode(std::size_t mode, std::size_t modes) {
    if (mode < 1 || mode > modes) {
        throw Error(ErrorCode::ModeOutOfRange,
                    "mode " + std::to_string(mode) + " outside 1.." + std::to_string(modes));
    }
}

constexpr std::uint64_t kHomodyneStreamBase = std::uint64_t{1} << 32;

}  // namespace

std::vector<double> mode_energies(const MomentVector &z) {
    std::vector<double> out(z.modes());
    for (std::size_t m = 0; m < z.modes(); ++m) out[m] = 0.5 * (z.q(m) * z.q(m) + z.p(m) * z.p(m));
    return out;
}

std::vector<double> mode_energies(const MomentVector &z, const CovarianceMatrix &sigma) {
    if (sigma.modes() != z.modes()) throw Error(ErrorCode::DimensionMismatch, "sigma and z sizes differ");
    const std::size_t modes = z.modes();
    const RealMatrix &s = sigma.entries();
    std::vector<double> out(modes);
    for (std::size_t m = 0; m < modes; ++m) {
        const auto qi = static_cast<Eigen::Index>(m);
        const auto pi = static_cast<Eigen::Index>(m + modes);
        out[m] = 0.5 * (s(qi, qi) + s(pi, pi) + z.q(m) * z.q(m) + z.p(m) * z.p(m)) - 0.5;
    }
    return out;
}

double total_energy(const std::vector<double> &energies) {
    double total = 0.0;
    for (double e : energies) total += e;
    return total;
}

PhotonCountSample sample_photon_counts(const MomentVector &z, std::uint64_t seed) {
    const auto energies = mode_energies(z);
    PhotonCountSample out;
    out.seed = seed;
    out.counts.resize(energies.size());
    for (std::size_t m = 0; m < energies.size(); ++m) {
        Philox4x32 rng(seed, m);
        out.counts[m] = sample_poisson(rng, energies[m]);
    }
    return out;
}

HomodyneMoments homodyne_moments(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode,
                                 double theta) {
    if (sigma.modes() != z.modes()) throw Error(ErrorCode::DimensionMismatch, "sigma and z sizes differ");
    check_mode(mode, z.modes());
    const std::size_t m = mode - 1;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const RealMatrix &cov = sigma.entries();
    const auto qi = static_cast<Eigen::Index>(m);
    const auto pi = static_cast<Eigen::Index>(m + z.modes());
    HomodyneMoments out;
    out.mean = c * z.q(m) + s * z.p(m);
    out.variance = c * c * cov(qi, qi) + 2.0 * c * s * cov(qi, pi) + s * s * cov(pi, pi);
    if (!(out.variance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative quadrature variance");
    return out;
}

double sample_homodyne(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode, double theta,
                       std::uint64_t seed) {
    return sample_homodyne_many(z, sigma, mode, theta, seed, 1).front();
}

std::vector<double> sample_homodyne_many(const MomentVector &z, const CovarianceMatrix &sigma, std::size_t mode,
                                         double theta, std::uint64_t seed, std::size_t count) {
    const HomodyneMoments mom = homodyne_moments(z, sigma, mode, theta);
    const double sd = std::sqrt(mom.variance);
    Philox4x32 rng(seed, kHomodyneStreamBase + (mode - 1));
    std::vector<double> out(count);
    for (auto &v : out) v = mom.mean + sd * sample_standard_normal(rng);
    return out;
}

double symplectic_fraction(const ScaledState &s) {
    const std::size_t modes = s.modes();
    if (s.amplitudes.size() != 2 * modes) throw Error(ErrorCode::DimensionMismatch, "bad state size");
    const double q = kernels::norm_squared(std::span<const double>(s.amplitudes.data(), modes));
    const double p = kernels::norm_squared(std::span<const double>(s.amplitudes.data() + modes, modes));
    return q / (q + p);
}

double register_halves_fraction(const ScaledState &s) {
    const std::size_t modes = s.modes();
    if (s.amplitudes.size() != 2 * modes) throw Error(ErrorCode::DimensionMismatch, "bad state size");
    if (modes == 1) return 1.0;
    const std::size_t half = modes / 2;
    const double *a = s.amplitudes.data();
    const double low = kernels::norm_squared(std::span<const double>(a, half)) +
                       kernels::norm_squared(std::span<const double>(a + modes, half));
    const double high = kernels::norm_squared(std::span<const double>(a + half, half)) +
                        kernels::norm_squared(std::span<const double>(a + modes + half, half));
    return low / (low + high);
}

}  // namespace symplectiq
