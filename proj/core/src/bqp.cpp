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

#include "symplectiq/bqp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symplectiq/random.hpp"
#include "text_util.hpp"

namespace symplectiq {

namespace {

void fail_instance(const std::string &reason) { throw Error(ErrorCode::InvalidArgument, reason); }

BitStructuredLayer random_layer(Philox4x32 &rng, std::size_t n) {
    BitStructuredLayer layer;
    layer.k = 1 + static_cast<std::size_t>(rng.next_u64() % n);
    layer.l = 1 + static_cast<std::size_t>(rng.next_u64() % (n - 1));
    if (layer.l >= layer.k) ++layer.l;
    layer.theta = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
    return layer;
}

void check_qubit(std::size_t q, std::size_t n, const char *what) {
    if (q < 1 || q > n) {
        throw Error(ErrorCode::QubitOutOfRange,
                    std::string(what) + " qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

void validate_instance(const Bqp1Instance &inst) {
    if (inst.n < 2) fail_instance("bit-structured instances need n >= 2");
    if (!(inst.x > 0.0) || !std::isfinite(inst.x)) fail_instance("x must be positive and finite");
    for (std::size_t i = 0; i < inst.layers.size(); ++i) {
        const auto &layer = inst.layers[i];
        if (layer.k < 1 || layer.k > inst.n || layer.l < 1 || layer.l > inst.n) {
            throw Error(ErrorCode::BitOutOfRange, "layer " + std::to_string(i) + ": bit outside 1..n");
        }
        if (layer.k == layer.l) {
            throw Error(ErrorCode::PairingBitInCondition, "layer " + std::to_string(i) + ": k must differ from l");
        }
        if (!std::isfinite(layer.theta)) fail_instance("layer " + std::to_string(i) + ": theta not finite");
    }
}

GbGate layer_to_gb(const BitStructuredLayer &layer) {
    return gb::GlobalBeamsplitter{BitCondition{{{layer.k, 0}}}, layer.l, layer.theta / 4.0};
}

GbCircuit instance_to_gb(const Bqp1Instance &inst) {
    validate_instance(inst);
    GbCircuit c;
    c.modes = std::size_t{1} << inst.n;
    for (const auto &layer : inst.layers) c.gates.push_back(layer_to_gb(layer));
    return c;
}

const char *decision_name(Decision d) {
    switch (d) {
        case Decision::Yes: return "YES";
        case Decision::No: return "NO";
        case Decision::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

Decision decide(double q1_over_x) {
    if (q1_over_x > kYesThreshold) return Decision::Yes;
    if (q1_over_x < kNoThreshold) return Decision::No;
    return Decision::Indeterminate;
}

BqpResult run_instance(const Bqp1Instance &inst, const RunOptions &options) {
    validate_instance(inst);
    check_capacity(inst.n + 1, options.capacity_qubits);
    const QubitCircuit qc = compile(instance_to_gb(inst));
    RunResult r = run(qc, ScaledState::basis_zero(inst.n, inst.x, options.capacity_qubits), options);
    BqpResult out;
    out.q1_over_x = r.state.scale * r.state.amplitudes[0] / inst.x;
    out.decision = decide(out.q1_over_x);
    out.trajectory = std::move(r.trajectory);
    return out;
}

std::string serialize_instance(const Bqp1Instance &inst) {
    std::ostringstream os;
    os << "n " << inst.n << "\n";
    os << "x " << text::format_double(inst.x) << "\n";
    for (const auto &layer : inst.layers) {
        os << "layer k=" << layer.k << " l=" << layer.l << " theta=" << text::format_double(layer.theta) << "\n";
    }
    return os.str();
}

Bqp1Instance parse_instance(std::string_view source) {
    Bqp1Instance inst;
    bool have_n = false;
    for (const auto &line : text::tokenize(source)) {
        if (line.head == "n") {
            text::positional_count(line, 1);
            inst.n = text::to_size(line, "n", line.positional[0]);
            have_n = true;
        } else if (line.head == "x") {
            text::positional_count(line, 1);
            inst.x = text::to_double(line, "x", line.positional[0]);
        } else if (line.head == "layer") {
            text::allow_only(line, {"k", "l", "theta"});
            BitStructuredLayer layer;
            layer.k = text::to_size(line, "k", text::require(line, "k"));
            layer.l = text::to_size(line, "l", text::require(line, "l"));
            layer.theta = text::to_double(line, "theta", text::require(line, "theta"));
            inst.layers.push_back(layer);
        } else {
            text::fail(line, "unknown instance line '" + line.head + "'");
        }
    }
    if (!have_n) throw Error(ErrorCode::ParseError, "instance needs an 'n <int>' line");
    validate_instance(inst);
    return inst;
}

Bqp1Instance random_instance(std::size_t n, std::size_t layers, std::uint64_t seed, double x) {
    Bqp1Instance inst;
    inst.n = n;
    inst.x = x;
    validate_instance(inst);
    Philox4x32 rng(seed);
    for (std::size_t i = 0; i < layers; ++i) inst.layers.push_back(random_layer(rng, n));
    return inst;
}

Bqp1Instance planted_instance(std::size_t n, std::size_t layers, bool yes, std::uint64_t seed, double x) {
    Bqp1Instance inst;
    inst.n = n;
    inst.x = x;
    validate_instance(inst);
    if (layers == 0) {
        if (!yes) fail_instance("a planted NO instance needs at least one layer");
        return inst;
    }
    Philox4x32 rng(seed, 1);
    const double target = yes ? kPlantedYesOverlap : kPlantedNoOverlap;
    const double phi = 2.0 * std::acos(target);
    // On |0...0> the control (bit k = 0) always fires, so amplitude 0 becomes cos(phi / 2).
    BitStructuredLayer head = random_layer(rng, n);
    const std::size_t split = layers % 2 == 0 ? 2 : 1;
    head.theta = phi / static_cast<double>(split);
    for (std::size_t i = 0; i < split; ++i) inst.layers.push_back(head);
    const std::size_t half = (layers - split) / 2;
    std::vector<BitStructuredLayer> body;
    for (std::size_t i = 0; i < half; ++i) body.push_back(random_layer(rng, n));
    inst.layers.insert(inst.layers.end(), body.begin(), body.end());
    for (auto it = body.rbegin(); it != body.rend(); ++it) {
        inst.layers.push_back({it->k, it->l, -it->theta});
    }
    return inst;
}

UnitaryCircuit parse_unitary_circuit(std::string_view source) {
    UnitaryCircuit uc;
    bool have_header = false;
    for (const auto &line : text::tokenize(source)) {
        auto num = [&](const char *key) { return text::to_double(line, key, text::require(line, key)); };
        auto idx = [&](const char *key) { return text::to_size(line, key, text::require(line, key)); };
        if (line.head == "qubits") {
            text::positional_count(line, 1);
            uc.n = text::to_size(line, "qubits", line.positional[0]);
            have_header = true;
            continue;
        }
        if (!have_header) text::fail(line, "circuit must start with 'qubits <n>'");
        UnitaryGate g;
        if (line.head == "rz" || line.head == "ry") {
            text::allow_only(line, {"q", "theta"});
            g.kind = line.head == "rz" ? UnitaryGate::Kind::Rz : UnitaryGate::Kind::Ry;
            g.target = idx("q");
            g.theta = num("theta");
        } else if (line.head == "cry") {
            text::allow_only(line, {"ctrl", "tgt", "theta"});
            g.kind = UnitaryGate::Kind::CRy;
            g.control = idx("ctrl");
            g.target = idx("tgt");
            g.theta = num("theta");
        } else {
            throw Error(ErrorCode::UnsupportedGate, "line " + std::to_string(line.number) + ": gate '" + line.head +
                                                         "' is not in {rz, ry, cry}");
        }
        uc.gates.push_back(g);
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing 'qubits <n>' line");
    return uc;
}

std::string serialize_unitary_circuit(const UnitaryCircuit &uc) {
    std::ostringstream os;
    os << "qubits " << uc.n << "\n";
    for (const auto &g : uc.gates) {
        switch (g.kind) {
            case UnitaryGate::Kind::Rz: os << "rz q=" << g.target; break;
            case UnitaryGate::Kind::Ry: os << "ry q=" << g.target; break;
            case UnitaryGate::Kind::CRy: os << "cry ctrl=" << g.control << " tgt=" << g.target; break;
        }
        os << " theta=" << text::format_double(g.theta) << "\n";
    }
    return os.str();
}

std::vector<GbGate> reverse_compile(const UnitaryCircuit &uc) {
    std::vector<GbGate> out;
    for (const auto &g : uc.gates) {
        check_qubit(g.target, uc.n, "target");
        switch (g.kind) {
            case UnitaryGate::Kind::Rz:
                // Controlled Ry(2 tau) on the symplectic qubit multiplies q + ip by e^{i tau} where bit k = 1.
                out.emplace_back(gb::GlobalPhase{BitCondition{{{g.target, 1}}}, -g.theta / 2.0});
                break;
            case UnitaryGate::Kind::Ry:
                out.emplace_back(gb::GlobalBeamsplitter{BitCondition{}, g.target, g.theta / 4.0});
                break;
            case UnitaryGate::Kind::CRy:
                check_qubit(g.control, uc.n, "control");
                if (g.control == g.target) {
                    throw Error(ErrorCode::PairingBitInCondition, "cry control and target must differ");
                }
                out.emplace_back(gb::GlobalBeamsplitter{BitCondition{{{g.control, 1}}}, g.target, g.theta / 4.0});
                break;
        }
    }
    return out;
}

GbCircuit reverse_compile_circuit(const UnitaryCircuit &uc) {
    if (uc.n < 1) throw Error(ErrorCode::InvalidArgument, "unitary circuit needs at least one qubit");
    GbCircuit c;
    c.modes = std::size_t{1} << uc.n;
    c.gates = reverse_compile(uc);
    return c;
}

MomentVector real_double(std::span<const std::complex<double>> psi, double x) {
    if (!is_power_of_two(psi.size())) {
        throw Error(ErrorCode::DimensionMismatch, "state length must be a power of two");
    }
    const std::size_t modes = psi.size();
    RealVector e(static_cast<Eigen::Index>(2 * modes));
    for (std::size_t r = 0; r < modes; ++r) {
        e[static_cast<Eigen::Index>(r)] = x * psi[r].real();
        e[static_cast<Eigen::Index>(modes + r)] = x * psi[r].imag();
    }
    return MomentVector(std::move(e));
}

std::vector<BitStructuredLayer> f_gate_layers(std::size_t k, std::size_t l) {
    if (k == l) throw Error(ErrorCode::InvalidArgument, "F gate needs two distinct qubits");
    return {BitStructuredLayer{k, l, std::numbers::pi}};
}

}  // namespace symplectiq
