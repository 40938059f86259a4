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

#include "symplectiq/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "symplectiq/statevector.hpp"
#include "text_util.hpp"

namespace symplectiq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

kernels::Selector selector(const std::vector<Control> &cs, std::size_t n) {
    kernels::Selector sel;
    for (const auto &c : cs) {
        const std::uint64_t bit = std::uint64_t{1} << bit_position(c.qubit, n);
        sel.mask |= bit;
        if (c.value == 1) sel.value |= bit;
    }
    return sel;
}

kernels::Selector selector(const BitCondition &cond, std::size_t n) {
    std::vector<Control> cs;
    for (const auto &c : cond.clauses) cs.push_back({c.bit, c.value});
    return selector(cs, n);
}

// Householder reflection I - 2 v v^T / v^T v with v = e0 - u maps e0 to u.
void householder(const std::array<double, 4> &u, double (&m)[16]) {
    double v[4] = {1.0 - u[0], -u[1], -u[2], -u[3]};
    const double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m[4 * r + c] = (r == c ? 1.0 : 0.0) - (vv > 0.0 ? 2.0 * v[r] * v[c] / vv : 0.0);
        }
    }
}

void exact_squeeze_raw(std::span<double> a, const BitCondition &cond, double t, Sign sign, std::size_t n) {
    kernels::Selector q = selector(cond, n);
    kernels::Selector p = q;
    const std::uint64_t sbit = std::uint64_t{1} << n;
    q.mask |= sbit;
    p.mask |= sbit;
    p.value |= sbit;
    const double e = 2.0 * t * sign_value(sign);
    kernels::scale_selected(a, q, std::exp(e));
    kernels::scale_selected(a, p, std::exp(-e));
}

// Every gate except Postselect, as a linear map on the buffer.
void apply_raw(std::span<double> a, const QubitGate &g, std::size_t n) {
    std::visit(overloaded{
                   [&](const qg::Ry &x) { kernels::controlled_ry(a, {}, bit_position(x.target, n), x.theta); },
                   [&](const qg::X &x) { kernels::controlled_x(a, {}, bit_position(x.target, n)); },
                   [&](const qg::MultiControlledRy &x) {
                       kernels::controlled_ry(a, selector(x.controls, n), bit_position(x.target, n), x.theta);
                   },
                   [&](const qg::MultiControlledX &x) {
                       kernels::controlled_x(a, selector(x.controls, n), bit_position(x.target, n));
                   },
                   [&](const qg::SelectZ &x) {
                       kernels::Selector sel = selector(x.controls, n);
                       const std::uint64_t tbit = std::uint64_t{1} << bit_position(x.target, n);
                       sel.mask |= tbit;
                       // Z flips |1>, -Z flips |0>.
                       if (!x.negated) sel.value |= tbit;
                       kernels::scale_selected(a, sel, -1.0);
                   },
                   [&](const qg::SelectReflect &x) {
                       kernels::reflect_unmatched(a, selector(x.controls, n), selector(x.pattern, n));
                   },
                   [&](const qg::AnsatzPrep &x) {
                       double m[16];
                       householder(x.amplitudes(), m);
                       kernels::apply_two_bit(a, n + 1, n + 2, m);
                   },
                   [&](const qg::ExactSqueeze &x) { exact_squeeze_raw(a, x.cond, x.t, x.sign, n); },
                   [&](const qg::Postselect &) {
                       throw Error(ErrorCode::InvalidArgument, "postselect needs the ancilla-extended state");
                   },
               },
               g);
}

std::size_t core_size(std::size_t n) { return std::size_t{2} << n; }

// Zeroes every ancilla != 00 slice and returns the remaining squared norm.
double project_ancillas(std::vector<double> &buffer, std::size_t n) {
    std::fill(buffer.begin() + static_cast<std::ptrdiff_t>(core_size(n)), buffer.end(), 0.0);
    return kernels::norm_squared(std::span<const double>(buffer.data(), core_size(n)));
}

Error at_gate(std::size_t i, const Error &e) {
    return Error(e.code(), "qubit gate " + std::to_string(i) + ": " + e.detail());
}

void check_state(const ScaledState &s) {
    if (s.amplitudes.size() != core_size(s.register_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "state holds " + std::to_string(s.amplitudes.size()) +
                                                      " amplitudes, expected 2^(n+1)");
    }
}

}  // namespace

void check_capacity(std::size_t qubits, std::size_t limit) {
    limit = std::min(limit, kHardCapacityQubits);
    if (qubits > limit) {
        const double gib = std::ldexp(8.0, static_cast<int>(qubits)) / std::ldexp(1.0, 30);
        std::ostringstream os;
        os << qubits << " qubits need " << gib << " GiB of amplitudes; the limit is " << limit
           << " qubits (n + 1, plus 2 ancillas for LCU squeezes)";
        throw Error(ErrorCode::CapacityExceeded, os.str());
    }
}

ScaledState ScaledState::basis_zero(std::size_t n, double scale, std::size_t capacity) {
    check_capacity(n + 1, capacity);
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::InvalidArgument, "scale must be positive and finite");
    }
    ScaledState s;
    s.register_qubits = n;
    s.amplitudes.assign(core_size(n), 0.0);
    s.amplitudes[0] = 1.0;
    s.scale = scale;
    return s;
}

ScaledState encode_mean(const MomentVector &z, std::size_t capacity) {
    const auto n = static_cast<std::size_t>(std::countr_zero(z.modes()));
    check_capacity(n + 1, capacity);
    const double norm = z.norm();
    if (norm == 0.0) throw Error(ErrorCode::ZeroVector, "cannot encode the all-zero moment vector");
    ScaledState s;
    s.register_qubits = n;
    s.amplitudes.resize(core_size(n));
    const RealVector &e = z.entries();
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        s.amplitudes[i] = e[static_cast<Eigen::Index>(i)] / norm;
    }
    s.scale = norm;
    return s;
}

MomentVector decode_mean(const ScaledState &s) {
    check_state(s);
    RealVector e(static_cast<Eigen::Index>(s.amplitudes.size()));
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        e[static_cast<Eigen::Index>(i)] = s.scale * s.amplitudes[i];
    }
    return MomentVector(std::move(e));
}

void apply_gate(ScaledState &s, const QubitGate &g) {
    check_state(s);
    const std::size_t n = s.register_qubits;
    for (std::size_t q : gate_qubits(g, n)) {
        if (q > n) {
            throw Error(ErrorCode::QubitOutOfRange,
                        std::string(qubit_gate_name(g)) + " touches ancilla qubit " + std::to_string(q) +
                            "; LCU blocks go through apply_lcu_block");
        }
    }
    apply_raw(s.amplitudes, g, n);
    if (std::holds_alternative<qg::ExactSqueeze>(g)) {
        const double norm = std::sqrt(kernels::norm_squared(s.amplitudes));
        kernels::scale(s.amplitudes, 1.0 / norm);
        s.scale *= norm;
    }
}

void apply_squeeze_exact(ScaledState &s, const BitCondition &cond, double t, Sign sign) {
    apply_gate(s, qg::ExactSqueeze{cond, t, sign});
}

void apply_squeeze_exact(ScaledState &s, std::size_t m, double t, Sign sign) {
    if (m < 1 || m > s.modes()) throw Error(ErrorCode::ModeOutOfRange, "squeeze mode out of range");
    apply_squeeze_exact(s, condition_for_mode(m, s.register_qubits), t, sign);
}

double apply_lcu_block(ScaledState &s, std::span<const QubitGate> block) {
    check_state(s);
    const std::size_t n = s.register_qubits;
    const auto *prep = block.empty() ? nullptr : std::get_if<qg::AnsatzPrep>(&block.front());
    const auto *post = block.empty() ? nullptr : std::get_if<qg::Postselect>(&block.back());
    if (prep == nullptr || prep->inverse || post == nullptr) {
        throw Error(ErrorCode::InvalidArgument, "an LCU block runs from prep to postselect");
    }
    std::vector<double> buffer(core_size(n) * 4, 0.0);
    std::copy(s.amplitudes.begin(), s.amplitudes.end(), buffer.begin());
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        if (std::holds_alternative<qg::Postselect>(block[i])) {
            throw Error(ErrorCode::InvalidArgument, "postselect inside an LCU block");
        }
        apply_raw(buffer, block[i], n);
    }
    const double p = project_ancillas(buffer, n);
    if (!(p >= 1e-300)) throw Error(ErrorCode::SuccessProbabilityZero, "postselection probability underflow");
    const double root = std::sqrt(p);
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) s.amplitudes[i] = buffer[i] / root;
    s.scale *= root / post->gamma;
    s.success_log += std::log(p);
    return p;
}

RunResult run(const QubitCircuit &qc, ScaledState s0, const RunOptions &options) {
    validate_qubit_circuit(qc);
    check_state(s0);
    if (s0.register_qubits != qc.register_qubits) {
        throw Error(ErrorCode::DimensionMismatch, "state and circuit register sizes differ");
    }
    const std::size_t n = qc.register_qubits;
    check_capacity(qc.total_qubits(), options.capacity_qubits);

    RunResult result;
    std::vector<double> buffer = std::move(s0.amplitudes);
    if (qc.ancillas) buffer.resize(core_size(n) * 4, 0.0);
    double scale = s0.scale;
    double success_log = s0.success_log;

    std::size_t step = 0;
    auto record = [&](std::size_t gate_index) {
        result.trajectory.push_back({step++, gate_index, buffer[0]});
    };
    record(0);
    bool in_block = false;
    for (std::size_t i = 0; i < qc.gates.size(); ++i) {
        const QubitGate &g = qc.gates[i];
        try {
            if (const auto *post = std::get_if<qg::Postselect>(&g)) {
                const double p = project_ancillas(buffer, n);
                if (!(p >= 1e-300)) {
                    throw Error(ErrorCode::SuccessProbabilityZero, "postselection probability underflow");
                }
                kernels::scale(std::span<double>(buffer.data(), core_size(n)), 1.0 / std::sqrt(p));
                scale *= std::sqrt(p) / post->gamma;
                success_log += std::log(p);
                in_block = false;
            } else {
                if (const auto *prep = std::get_if<qg::AnsatzPrep>(&g); prep != nullptr && !prep->inverse) {
                    in_block = true;
                }
                apply_raw(buffer, g, n);
                if (std::holds_alternative<qg::ExactSqueeze>(g)) {
                    const double norm = std::sqrt(kernels::norm_squared(buffer));
                    kernels::scale(buffer, 1.0 / norm);
                    scale *= norm;
                }
            }
        } catch (const Error &e) {
            throw at_gate(i, e);
        }
        const std::size_t applied = i + 1;
        const bool last = applied == qc.gates.size();
        if (!in_block && (last || (options.trace_every != 0 && applied % options.trace_every == 0))) {
            record(applied);
        }
    }
    buffer.resize(core_size(n));
    buffer.shrink_to_fit();
    result.state.register_qubits = n;
    result.state.amplitudes = std::move(buffer);
    result.state.scale = scale;
    result.state.success_log = success_log;
    return result;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint> &trajectory) {
    std::string out = "step,gate_index,overlap\n";
    for (const auto &p : trajectory) {
        out += std::to_string(p.step) + "," + std::to_string(p.gate_index) + "," + text::format_double(p.overlap) +
               "\n";
    }
    return out;
}

RealVector apply_linear(const QubitCircuit &qc, const RealVector &v) {
    validate_qubit_circuit(qc);
    const std::size_t n = qc.register_qubits;
    if (static_cast<std::size_t>(v.size()) != core_size(n)) {
        throw Error(ErrorCode::DimensionMismatch, "vector length must be 2M");
    }
    check_capacity(qc.total_qubits());
    std::vector<double> buffer(qc.ancillas ? core_size(n) * 4 : core_size(n), 0.0);
    std::copy(v.data(), v.data() + v.size(), buffer.begin());
    for (std::size_t i = 0; i < qc.gates.size(); ++i) {
        try {
            if (const auto *post = std::get_if<qg::Postselect>(&qc.gates[i])) {
                project_ancillas(buffer, n);
                kernels::scale(std::span<double>(buffer.data(), core_size(n)), 1.0 / post->gamma);
            } else {
                apply_raw(buffer, qc.gates[i], n);
            }
        } catch (const Error &e) {
            throw at_gate(i, e);
        }
    }
    return Eigen::Map<const RealVector>(buffer.data(), static_cast<Eigen::Index>(core_size(n)));
}

RealMatrix dense_matrix(const QubitCircuit &qc) {
    if (qc.register_qubits > 12) {
        throw Error(ErrorCode::CapacityExceeded, "dense circuit matrices are limited to n <= 12");
    }
    const auto d = static_cast<Eigen::Index>(core_size(qc.register_qubits));
    RealMatrix out(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        out.col(j) = apply_linear(qc, RealVector::Unit(d, j));
    }
    return out;
}

SigmaState SigmaState::from_covariance(const CovarianceMatrix &sigma) {
    const double tr = sigma.entries().trace();
    if (!(tr > 0.0)) throw Error(ErrorCode::InvalidArgument, "covariance trace must be positive");
    return SigmaState{sigma.entries() / tr, tr};
}

GeneratorKind circuit_kind(const QubitCircuit &qc) {
    bool rotations = false;
    bool squeezes = false;
    for (const auto &g : qc.gates) {
        rotations = rotations || std::holds_alternative<qg::Ry>(g) || std::holds_alternative<qg::MultiControlledRy>(g);
        squeezes = squeezes || std::holds_alternative<qg::AnsatzPrep>(g) || std::holds_alternative<qg::ExactSqueeze>(g);
    }
    if (rotations && squeezes) return GeneratorKind::Mixed;
    return squeezes ? GeneratorKind::NonParticlePreserving : GeneratorKind::ParticlePreserving;
}

SigmaState evolve_sigma(const QubitCircuit &qc, const SigmaState &sigma0, GeneratorKind kind) {
    if (kind == GeneratorKind::Mixed) {
        throw Error(ErrorCode::MixedGeneratorUnsupported, "covariance evolution needs a single generator class");
    }
    const GeneratorKind actual = circuit_kind(qc);
    if (actual == GeneratorKind::Mixed) {
        throw Error(ErrorCode::MixedGeneratorUnsupported, "circuit mixes rotations and squeezes");
    }
    const bool trivial = qc.gates.empty();
    if (!trivial && actual != kind) {
        throw Error(ErrorCode::MixedGeneratorUnsupported,
                    std::string("circuit is ") + generator_kind_name(actual) + " but " + generator_kind_name(kind) +
                        " was requested");
    }
    const auto d = static_cast<Eigen::Index>(core_size(qc.register_qubits));
    if (sigma0.matrix.rows() != d || sigma0.matrix.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch, "covariance size does not match the circuit");
    }
    const RealMatrix sigma = sigma0.physical();
    RealMatrix left(d, d);
    for (Eigen::Index j = 0; j < d; ++j) left.col(j) = apply_linear(qc, sigma.col(j));
    RealMatrix both(d, d);
    const RealMatrix left_t = left.transpose();
    for (Eigen::Index j = 0; j < d; ++j) both.col(j) = apply_linear(qc, left_t.col(j));
    both = 0.5 * (both + both.transpose()).eval();
    const double tr = both.trace();
    return SigmaState{both / tr, tr};
}

namespace {

void put_u32(std::ostream &out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char *>(b), 4);
}

void put_f64(std::ostream &out, double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char *>(b), 8);
}

std::uint64_t get_le(std::istream &in, int bytes) {
    unsigned char b[8] = {};
    in.read(reinterpret_cast<char *>(b), bytes);
    if (!in) throw Error(ErrorCode::IoError, "truncated snapshot");
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

constexpr char kMagic[4] = {'S', 'Q', 'S', '1'};

}  // namespace

void write_snapshot(std::ostream &out, const ScaledState &s) {
    check_state(s);
    out.write(kMagic, 4);
    put_u32(out, static_cast<std::uint32_t>(s.register_qubits));
    put_f64(out, s.scale);
    for (double a : s.amplitudes) put_f64(out, a);
    if (!out) throw Error(ErrorCode::IoError, "failed to write snapshot");
}

ScaledState read_snapshot(std::istream &in, std::size_t capacity) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) throw Error(ErrorCode::IoError, "not a snapshot (bad magic)");
    const auto n = static_cast<std::size_t>(get_le(in, 4));
    check_capacity(n + 1, capacity);
    ScaledState s;
    s.register_qubits = n;
    s.scale = std::bit_cast<double>(get_le(in, 8));
    s.amplitudes.resize(core_size(n));
    for (double &a : s.amplitudes) a = std::bit_cast<double>(get_le(in, 8));
    return s;
}

}  // namespace symplectiq
