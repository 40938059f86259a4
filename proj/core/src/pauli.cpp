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

#include "symplectiq/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <sstream>
#include <tuple>

#include "symplectiq/error.hpp"

namespace symplectiq {

namespace {

int mod4(long long k) { return static_cast<int>(((k % 4) + 4) % 4); }

std::uint64_t full_mask(std::size_t size) {
    return size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli strings have different lengths");
    }
}

// (-1)^((y + y mod 2) / 2): sign of R_P relative to X^x Z^z.
double real_form_sign(std::size_t y) { return ((y + y % 2) / 2) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

PauliString::PauliString(std::string_view letters, int phase) : size_(letters.size()), phase_(mod4(phase)) {
    if (size_ > 64) {
        throw Error(ErrorCode::InvalidArgument, "Pauli strings are limited to 64 letters");
    }
    for (std::size_t j = 0; j < size_; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (size_ - 1 - j);
        switch (letters[j]) {
            case 'I':
            case '_': break;
            case 'X': x_ |= bit; break;
            case 'Y': x_ |= bit; z_ |= bit; break;
            case 'Z': z_ |= bit; break;
            default:
                throw Error(ErrorCode::InvalidArgument,
                            "bad Pauli letter '" + std::string(1, letters[j]) + "'");
        }
    }
}

PauliString::PauliString(std::size_t size, std::uint64_t x_mask, std::uint64_t z_mask, int phase)
    : size_(size), x_(x_mask), z_(z_mask), phase_(mod4(phase)) {
    if (size_ > 64 || (x_ & ~full_mask(size_)) != 0 || (z_ & ~full_mask(size_)) != 0) {
        throw Error(ErrorCode::InvalidArgument, "Pauli masks exceed string length");
    }
}

Pauli PauliString::letter(std::size_t j) const {
    const std::uint64_t bit = std::uint64_t{1} << (size_ - 1 - j);
    const bool x = (x_ & bit) != 0;
    const bool z = (z_ & bit) != 0;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

std::size_t PauliString::y_count() const { return static_cast<std::size_t>(std::popcount(x_ & z_)); }

std::string PauliString::letters() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t j = 0; j < size_; ++j) {
        out.push_back("IXYZ"[static_cast<int>(letter(j))]);
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

bool operator<(const PauliString &a, const PauliString &b) {
    return std::tie(a.size_, a.x_, a.z_, a.phase_) < std::tie(b.size_, b.x_, b.z_, b.phase_);
}

ComplexMatrix PauliString::to_dense() const {
    if (size_ > kMaxDensePauliQubits) {
        throw Error(ErrorCode::CapacityExceeded, "dense Pauli realization is limited to 7 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << size_);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    static const std::complex<double> kI[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> prefactor = kI[mod4(phase_ + static_cast<long long>(y_count()))];
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
        const double sign = (std::popcount(b & z_) % 2 == 0) ? 1.0 : -1.0;
        out(static_cast<Eigen::Index>(b ^ x_), static_cast<Eigen::Index>(b)) = prefactor * sign;
    }
    return out;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    const long long swaps = std::popcount(a.z_mask() & b.x_mask());
    const long long yc = std::popcount(x & z);
    const long long phase = a.phase() + b.phase() + static_cast<long long>(a.y_count()) +
                            static_cast<long long>(b.y_count()) + 2 * swaps - yc;
    return PauliString(a.size(), x, z, mod4(phase));
}

RealMatrix real_form_dense(const PauliString &key) {
    if (key.size() > kMaxDensePauliQubits) {
        throw Error(ErrorCode::CapacityExceeded, "dense Pauli realization is limited to 7 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << key.size());
    RealMatrix out = RealMatrix::Zero(dim, dim);
    const double s = real_form_sign(key.y_count());
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
        const double sign = (std::popcount(b & key.z_mask()) % 2 == 0) ? s : -s;
        out(static_cast<Eigen::Index>(b ^ key.x_mask()), static_cast<Eigen::Index>(b)) = sign;
    }
    return out;
}

double real_form_coefficient(const PauliString &p) {
    const int k = mod4(p.phase() - static_cast<long long>(p.y_count() % 2));
    if (k == 0) return 1.0;
    if (k == 2) return -1.0;
    throw Error(ErrorCode::InvalidArgument, "Pauli string " + p.str() + " is not a real matrix");
}

PauliSum PauliSum::from_string(const PauliString &p, double coefficient) {
    PauliSum out(p.size());
    out.add(p.without_phase(), coefficient * real_form_coefficient(p));
    return out;
}

void PauliSum::add(const PauliString &key, double coefficient) {
    if (terms_.empty() && qubits_ == 0) {
        qubits_ = key.size();
    }
    if (key.size() != qubits_) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli term has the wrong number of qubits");
    }
    const PauliString k = key.without_phase();
    auto it = terms_.find(k);
    const double value = (it == terms_.end() ? 0.0 : it->second) + coefficient;
    if (std::abs(value) < kDropTolerance) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(k, value);
    } else {
        it->second = value;
    }
}

double PauliSum::coefficient(const PauliString &key) const {
    auto it = terms_.find(key.without_phase());
    return it == terms_.end() ? 0.0 : it->second;
}

PauliSum PauliSum::operator+(const PauliSum &other) const {
    PauliSum out = *this;
    if (out.qubits_ == 0) out.qubits_ = other.qubits_;
    for (const auto &[k, c] : other.terms_) out.add(k, c);
    return out;
}

PauliSum PauliSum::operator-(const PauliSum &other) const { return *this + other.scaled(-1.0); }

PauliSum PauliSum::scaled(double factor) const {
    PauliSum out(qubits_);
    for (const auto &[k, c] : terms_) out.add(k, c * factor);
    return out;
}

PauliSum PauliSum::operator*(const PauliSum &other) const {
    PauliSum out(qubits_ != 0 ? qubits_ : other.qubits_);
    for (const auto &[ka, ca] : terms_) {
        for (const auto &[kb, cb] : other.terms_) {
            // R_A R_B = i^(ya%2 + yb%2) A B, and A B = i^k C = i^(k - yc%2) R_C.
            const PauliString c = multiply(ka, kb);
            const int k = mod4(static_cast<long long>(ka.y_count() % 2 + kb.y_count() % 2) + c.phase() -
                               static_cast<long long>(c.y_count() % 2));
            // Real matrices multiply to real matrices, so k is 0 or 2.
            const double sign = k == 0 ? 1.0 : -1.0;
            out.add(c.without_phase(), sign * ca * cb);
        }
    }
    return out;
}

RealMatrix PauliSum::to_dense() const {
    if (qubits_ > kMaxDensePauliQubits) {
        throw Error(ErrorCode::CapacityExceeded, "dense Pauli realization is limited to 7 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << qubits_);
    RealMatrix out = RealMatrix::Zero(dim, dim);
    for (const auto &[k, c] : terms_) out += c * real_form_dense(k);
    return out;
}

std::string PauliSum::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) os << " ";
        first = false;
        const bool imag = k.y_count() % 2 == 1;
        os << (c < 0 ? "- " : (first ? "" : "+ ")) << std::abs(c) << (imag ? "*i" : "*") << k.letters();
    }
    return first ? "0" : os.str();
}

PauliSum commutator(const PauliSum &a, const PauliSum &b) { return a * b - b * a; }

PauliSum pauli_decompose(const RealMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || !is_power_of_two(static_cast<std::size_t>(m.rows()))) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli decomposition needs a 2^N x 2^N matrix");
    }
    const auto dim = static_cast<std::uint64_t>(m.rows());
    const auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
    if (qubits > kMaxDensePauliQubits) {
        throw Error(ErrorCode::CapacityExceeded, "Pauli decomposition is limited to 7 qubits");
    }
    PauliSum out(qubits);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            const PauliString key(qubits, x, z);
            const double s = real_form_sign(key.y_count());
            double acc = 0.0;
            for (std::uint64_t b = 0; b < dim; ++b) {
                const double sign = (std::popcount(b & z) % 2 == 0) ? s : -s;
                acc += sign * m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b));
            }
            out.add(key, acc / static_cast<double>(dim));
        }
    }
    return out;
}

std::vector<PauliString> sp_basis(std::size_t n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "sp_basis needs n >= 1");
    }
    if (n + 1 > kMaxDensePauliQubits) {
        throw Error(ErrorCode::CapacityExceeded, "sp_basis is limited to n <= 6");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t top = dim;  // symplectic-letter bit in an (n+1)-qubit mask
    std::vector<PauliString> symmetric;
    std::vector<PauliString> antisymmetric;
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            const PauliString p(n, x, z);
            (p.is_symmetric() ? symmetric : antisymmetric).push_back(p);
        }
    }
    std::vector<PauliString> out;
    out.reserve(dim * (2 * dim + 1));
    for (const auto &ps : symmetric) out.emplace_back(n + 1, ps.x_mask() | top, ps.z_mask() | top, 1);
    for (const auto &pa : antisymmetric) out.emplace_back(n + 1, pa.x_mask(), pa.z_mask(), 1);
    for (const auto &ps : symmetric) out.emplace_back(n + 1, ps.x_mask() | top, ps.z_mask(), 0);
    for (const auto &ps : symmetric) out.emplace_back(n + 1, ps.x_mask(), ps.z_mask() | top, 0);
    return out;
}

const char *pauli_class_name(PauliGeneratorClass c) {
    switch (c) {
        case PauliGeneratorClass::RealTime: return "real-time";
        case PauliGeneratorClass::ImaginaryTime: return "imaginary-time";
        case PauliGeneratorClass::Mixed: return "mixed";
    }
    return "unknown";
}

PauliGeneratorClass classify_pauli_generator(const PauliSum &omega_k) {
    bool all_real_time = true;
    bool all_imaginary_time = true;
    for (const auto &[key, c] : omega_k.terms()) {
        (void)c;
        const Pauli first = key.letter(0);
        const bool odd_y = key.y_count() % 2 == 1;
        // iY (x) P_s and i 1 (x) P_a both have an odd number of Y letters overall.
        const bool real_time = (first == Pauli::Y || first == Pauli::I) && odd_y;
        const bool imaginary_time = (first == Pauli::X || first == Pauli::Z) && !odd_y;
        all_real_time = all_real_time && real_time;
        all_imaginary_time = all_imaginary_time && imaginary_time;
    }
    if (all_real_time) return PauliGeneratorClass::RealTime;
    if (all_imaginary_time) return PauliGeneratorClass::ImaginaryTime;
    return PauliGeneratorClass::Mixed;
}

}  // namespace symplectiq
