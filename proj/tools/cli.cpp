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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symplectiq/symplectiq.hpp"

namespace symplectiq::cli {

namespace {

using nlohmann::json;

constexpr const char *kConventions = R"(Conventions:
  modes are 1-based, m = 1..M with M = 2^n
  bit k (1..n) of mode m is bit k-1 of m-1, so bit 1 is the least significant
  qubit 0 is the symplectic qubit (0: q-block, 1: p-block), qubits 1..n the
  register (qubit k holds bit k), qubits n+1, n+2 the LCU ancillas
  Ry(theta) = exp(-i theta Y / 2)
  phase(m, t) and gphase -> Ry(-4t) on qubit 0 (clockwise in the q, p plane)
  bs(m, m', t) and gbs   -> Ry(+4t) on the pairing qubit, m (bit = 0) first
exit codes: 0 ok/YES, 1 NO, 2 usage or validation error, 3 INDETERMINATE,
4 capacity exceeded)";

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    f << content;
    if (!f) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string item = s.substr(pos, comma - pos);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::InvalidArgument, "bad number '" + item + "' in list");
        }
        out.push_back(v);
        if (comma == s.size()) break;
        pos = comma + 1;
    }
    return out;
}

MomentVector initial_moments(const std::string &z_list, double x, std::size_t modes) {
    if (!z_list.empty()) {
        const auto v = parse_list(z_list);
        if (v.size() != 2 * modes) {
            throw Error(ErrorCode::DimensionMismatch,
                        "--z needs 2M = " + std::to_string(2 * modes) + " entries, got " + std::to_string(v.size()));
        }
        return MomentVector(Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    MomentVector z = MomentVector::zeros(modes);
    z.set_q(0, x);
    return z;
}

json vector_json(const RealVector &v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

struct Common {
    std::size_t capacity = kDefaultCapacityQubits;
    double lcu_step = 0.05;
    std::string squeeze = "lcu";

    void add_to(CLI::App *app, bool with_squeeze) {
        app->add_option("--capacity", capacity, "qubit capacity limit (at most 30)")->capture_default_str();
        if (with_squeeze) {
            app->add_option("--lcu-step", lcu_step, "largest LCU squeeze step, in (0, 0.1]")->capture_default_str();
            app->add_option("--squeeze", squeeze, "squeeze realization: lcu or exact")
                ->check(CLI::IsMember({"lcu", "exact"}))
                ->capture_default_str();
        }
    }

    void check() const {
        if (capacity > kHardCapacityQubits) {
            throw Error(ErrorCode::InvalidArgument, "--capacity must not exceed 30");
        }
        if (!(lcu_step > 0.0 && lcu_step <= 0.1)) {
            throw Error(ErrorCode::InvalidArgument, "--lcu-step must lie in (0, 0.1]");
        }
    }

    CompileOptions compile_options() const {
        CompileOptions o;
        o.lcu_step = lcu_step;
        o.squeeze = squeeze == "exact" ? SqueezeMode::Exact : SqueezeMode::Lcu;
        return o;
    }
};

bool is_gb_text(const std::string &source) {
    std::istringstream in(source);
    std::string word;
    while (in >> word) {
        if (!word.empty() && word[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        return word == "modes";
    }
    return true;
}

std::map<std::string, std::size_t> gate_counts(const QubitCircuit &qc) {
    std::map<std::string, std::size_t> counts;
    for (const auto &g : qc.gates) ++counts[qubit_gate_name(g)];
    return counts;
}

// Oracle evolution of sigma through a GB circuit, gate by gate.
CovarianceMatrix oracle_sigma(const GbCircuit &c) {
    CovarianceMatrix sigma = CovarianceMatrix::coherent(c.modes);
    for (const auto &g : c.gates) sigma = evolve_cov(sigma, generator_of(g, c.modes), gate_time(g));
    return sigma;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"symplectiq: Gaussian bosonic circuits compiled to real qubit circuits"};
    app.footer(kConventions);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand help for every subcommand");

    Common common;
    std::string input;
    std::string output;
    std::string z_list;
    double x = 1.0;
    std::uint64_t seed = 0;
    std::size_t trace_every = 0;
    std::string trajectory_path;
    std::string snapshot_path;
    bool decompose = false;
    bool diff = false;

    auto *compile_cmd = app.add_subcommand("compile", "compile a GB circuit file into a qubit circuit");
    compile_cmd->add_option("input", input, "GB circuit file")->required();
    compile_cmd->add_option("-o,--output", output, "qubit circuit output (default stdout)");
    compile_cmd->add_flag("--decompose", decompose, "rewrite multi-controlled gates into one- and two-qubit gates");
    common.add_to(compile_cmd, true);

    auto *run_cmd = app.add_subcommand("run", "simulate a GB or qubit circuit on the encoded moment vector");
    run_cmd->add_option("input", input, "GB circuit (modes ...) or qubit circuit (qubits ...) file")->required();
    run_cmd->add_option("--z", z_list, "initial moments q_1..q_M,p_1..p_M (comma separated)");
    run_cmd->add_option("--x", x, "initial position of mode 1 when --z is absent")->capture_default_str();
    run_cmd->add_option("--trace-every", trace_every, "trajectory point every k gates (0: first and last)");
    run_cmd->add_option("--trajectory", trajectory_path, "write step,gate_index,overlap CSV here");
    run_cmd->add_option("--snapshot", snapshot_path, "write the final binary state snapshot here");
    common.add_to(run_cmd, true);

    std::string oracle_squeeze = "exact";
    auto *oracle_cmd = app.add_subcommand("oracle", "evolve moments with dense phase-space propagators (M <= 64)");
    oracle_cmd->add_option("input", input, "GB circuit file")->required();
    oracle_cmd->add_option("--z", z_list, "initial moments q_1..q_M,p_1..p_M (comma separated)");
    oracle_cmd->add_option("--x", x, "initial position of mode 1 when --z is absent")->capture_default_str();
    oracle_cmd->add_flag("--diff", diff, "also run the compiled circuit and report the max abs deviation");
    oracle_cmd->add_option("--squeeze", oracle_squeeze, "squeeze realization for --diff: lcu or exact")
        ->check(CLI::IsMember({"lcu", "exact"}))
        ->capture_default_str();
    common.add_to(oracle_cmd, false);

    auto *classify_cmd = app.add_subcommand("classify", "classify each gate generator by brackets and Pauli form");
    classify_cmd->add_option("input", input, "GB circuit file (M <= 64)")->required();

    std::size_t gen_n = 3;
    std::size_t gen_layers = 10;
    std::string gen_kind = "random";
    auto *gen_cmd = app.add_subcommand("bqp-gen", "generate a bit-structured interferometer instance");
    gen_cmd->add_option("--n", gen_n, "register bits (modes = 2^n)")->capture_default_str();
    gen_cmd->add_option("--layers", gen_layers, "number of layers L")->capture_default_str();
    gen_cmd->add_option("--kind", gen_kind, "random, yes (planted q1/x = 0.9) or no (planted 0.1)")
        ->check(CLI::IsMember({"random", "yes", "no"}))
        ->capture_default_str();
    gen_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--x", x, "initial displacement x")->capture_default_str();
    gen_cmd->add_option("-o,--output", output, "instance output (default stdout)");

    auto *bqp_cmd = app.add_subcommand("bqp-run", "decide a bit-structured interferometer instance");
    bqp_cmd->add_option("input", input, "instance file")->required();
    bqp_cmd->add_option("--trace-every", trace_every, "trajectory point every k layers (0: first and last)");
    bqp_cmd->add_option("--trajectory", trajectory_path, "write step,gate_index,overlap CSV here");
    common.add_to(bqp_cmd, false);

    auto *reverse_cmd = app.add_subcommand("reverse-compile", "map an {rz, ry, cry} qubit circuit to GB gates");
    reverse_cmd->add_option("input", input, "unitary circuit file")->required();
    reverse_cmd->add_option("-o,--output", output, "GB circuit output (default stdout)");

    std::string sample_kind = "photon";
    std::size_t sample_count = 1;
    std::size_t sample_mode = 1;
    double sample_theta = 0.0;
    std::string circuit_path;
    std::size_t modes_opt = 1;
    auto *sample_cmd = app.add_subcommand("sample", "draw photon-count or homodyne samples (JSON lines)");
    sample_cmd->add_option("--kind", sample_kind, "photon or homodyne")
        ->check(CLI::IsMember({"photon", "homodyne"}))
        ->capture_default_str();
    sample_cmd->add_option("--modes", modes_opt, "mode count M when no circuit is given")->capture_default_str();
    sample_cmd->add_option("--circuit", circuit_path, "GB circuit applied (by the oracle) before sampling");
    sample_cmd->add_option("--z", z_list, "initial moments q_1..q_M,p_1..p_M (comma separated)");
    sample_cmd->add_option("--x", x, "initial position of mode 1 when --z is absent")->capture_default_str();
    sample_cmd->add_option("--seed", seed, "first seed; sample i uses seed + i")->capture_default_str();
    sample_cmd->add_option("--count", sample_count, "number of samples")->capture_default_str();
    sample_cmd->add_option("--mode", sample_mode, "homodyne mode (1-based)")->capture_default_str();
    sample_cmd->add_option("--theta", sample_theta, "homodyne quadrature angle")->capture_default_str();

    auto *measure_cmd = app.add_subcommand("measure", "mode energies and qubit-register fractions");
    measure_cmd->add_option("--modes", modes_opt, "mode count M when no circuit is given")->capture_default_str();
    measure_cmd->add_option("--circuit", circuit_path, "GB circuit applied (by the oracle) before measuring");
    measure_cmd->add_option("--z", z_list, "initial moments q_1..q_M,p_1..p_M (comma separated)");
    measure_cmd->add_option("--x", x, "initial position of mode 1 when --z is absent")->capture_default_str();

    for (auto *sub : app.get_subcommands([](const CLI::App *) { return true; })) sub->footer(kConventions);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        common.check();
        if (*compile_cmd) {
            const GbCircuit c = parse_gb_circuit(read_file(input));
            QubitCircuit qc = compile(c, common.compile_options());
            if (decompose) qc = decompose_multicontrols(qc);
            write_text(output, serialize_qubit_circuit(qc), out);
            err << "compiled " << c.gates.size() << " GB gates into " << qc.gates.size() << " qubit gates on "
                << qc.total_qubits() << " qubits:";
            for (const auto &[name, count] : gate_counts(qc)) err << " " << name << "=" << count;
            err << "\n";
            return kExitOk;
        }
        if (*run_cmd) {
            const std::string source = read_file(input);
            QubitCircuit qc;
            if (is_gb_text(source)) {
                qc = compile(parse_gb_circuit(source), common.compile_options());
            } else {
                qc = parse_qubit_circuit(source);
            }
            check_capacity(qc.total_qubits(), common.capacity);
            const std::size_t modes = std::size_t{1} << qc.register_qubits;
            ScaledState s0 = z_list.empty() ? ScaledState::basis_zero(qc.register_qubits, x, common.capacity)
                                            : encode_mean(initial_moments(z_list, x, modes), common.capacity);
            RunOptions ro;
            ro.trace_every = trace_every;
            ro.capacity_qubits = common.capacity;
            const RunResult r = run(qc, std::move(s0), ro);
            if (!trajectory_path.empty()) write_text(trajectory_path, trajectory_csv(r.trajectory), out);
            if (!snapshot_path.empty()) {
                std::ofstream f(snapshot_path, std::ios::binary);
                if (!f) throw Error(ErrorCode::IoError, "cannot write '" + snapshot_path + "'");
                write_snapshot(f, r.state);
            }
            json j;
            j["modes"] = modes;
            j["qubits"] = qc.total_qubits();
            j["gates"] = qc.gates.size();
            j["scale"] = r.state.scale;
            j["success_log"] = r.state.success_log;
            j["q1"] = r.state.scale * r.state.amplitudes[0];
            if (modes <= 1024) j["z"] = vector_json(decode_mean(r.state).entries());
            out << j.dump() << "\n";
            return kExitOk;
        }
        if (*oracle_cmd) {
            const GbCircuit c = parse_gb_circuit(read_file(input));
            if (c.modes > kMaxOracleModes) {
                throw Error(ErrorCode::CapacityExceeded, "the dense oracle handles at most 64 modes");
            }
            const MomentVector z0 = initial_moments(z_list, x, c.modes);
            const MomentVector z = propagate_mean(c, z0);
            json j;
            j["modes"] = c.modes;
            j["z"] = vector_json(z.entries());
            if (diff) {
                CompileOptions co = common.compile_options();
                co.squeeze = oracle_squeeze == "exact" ? SqueezeMode::Exact : SqueezeMode::Lcu;
                const QubitCircuit qc = compile(c, co);
                const RunResult r = run(qc, encode_mean(z0, common.capacity));
                const RealVector sim = decode_mean(r.state).entries();
                j["max_abs_deviation"] = (sim - z.entries()).cwiseAbs().maxCoeff();
            }
            out << j.dump() << "\n";
            return kExitOk;
        }
        if (*classify_cmd) {
            const GbCircuit c = parse_gb_circuit(read_file(input));
            if (c.modes > kMaxOracleModes) {
                throw Error(ErrorCode::CapacityExceeded, "classification handles at most 64 modes");
            }
            const RealMatrix omega = build_omega(c.modes);
            for (std::size_t i = 0; i < c.gates.size(); ++i) {
                const GeneratorMatrix k = generator_of(c.gates[i], c.modes);
                const auto pauli = classify_pauli_generator(pauli_decompose(omega * k.matrix()));
                const auto matrix = classify_generator(k);
                const bool agree = (matrix == GeneratorKind::ParticlePreserving && pauli == PauliGeneratorClass::RealTime) ||
                                   (matrix == GeneratorKind::NonParticlePreserving &&
                                    pauli == PauliGeneratorClass::ImaginaryTime) ||
                                   (matrix == GeneratorKind::Mixed && pauli == PauliGeneratorClass::Mixed);
                json j;
                j["gate"] = i;
                j["name"] = gate_name(c.gates[i]);
                j["matrix"] = generator_kind_name(matrix);
                j["pauli"] = pauli_class_name(pauli);
                j["agree"] = agree;
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (*gen_cmd) {
            Bqp1Instance inst;
            if (gen_kind == "random") {
                inst = random_instance(gen_n, gen_layers, seed, x);
            } else {
                inst = planted_instance(gen_n, gen_layers, gen_kind == "yes", seed, x);
            }
            write_text(output, serialize_instance(inst), out);
            return kExitOk;
        }
        if (*bqp_cmd) {
            const Bqp1Instance inst = parse_instance(read_file(input));
            RunOptions ro;
            ro.trace_every = trace_every;
            ro.capacity_qubits = common.capacity;
            const BqpResult r = run_instance(inst, ro);
            if (!trajectory_path.empty()) write_text(trajectory_path, trajectory_csv(r.trajectory), out);
            json j;
            j["decision"] = decision_name(r.decision);
            j["q1_over_x"] = r.q1_over_x;
            j["n"] = inst.n;
            j["layers"] = inst.layers.size();
            out << j.dump() << "\n";
            switch (r.decision) {
                case Decision::Yes: return kExitOk;
                case Decision::No: return kExitNo;
                case Decision::Indeterminate: return kExitIndeterminate;
            }
            return kExitOk;
        }
        if (*reverse_cmd) {
            const UnitaryCircuit uc = parse_unitary_circuit(read_file(input));
            write_text(output, serialize_gb_circuit(reverse_compile_circuit(uc)), out);
            return kExitOk;
        }
        if (*sample_cmd || *measure_cmd) {
            std::optional<GbCircuit> c;
            if (!circuit_path.empty()) c = parse_gb_circuit(read_file(circuit_path));
            const std::size_t modes = c ? c->modes : modes_opt;
            if (!is_power_of_two(modes) || modes > kMaxOracleModes) {
                throw Error(ErrorCode::InvalidArgument, "modes must be a power of two no larger than 64");
            }
            MomentVector z = initial_moments(z_list, x, modes);
            CovarianceMatrix sigma = CovarianceMatrix::coherent(modes);
            if (c) {
                z = propagate_mean(*c, z);
                sigma = oracle_sigma(*c);
            }
            if (*measure_cmd) {
                json j;
                j["energies"] = mode_energies(z, sigma);
                j["total"] = total_energy(mode_energies(z, sigma));
                if (z.norm() > 0.0) {
                    const ScaledState s = encode_mean(z);
                    j["symplectic_fraction"] = symplectic_fraction(s);
                    j["register_halves_fraction"] = register_halves_fraction(s);
                }
                out << j.dump() << "\n";
                return kExitOk;
            }
            for (std::size_t i = 0; i < sample_count; ++i) {
                const std::uint64_t s = seed + i;
                if (sample_kind == "photon") {
                    const PhotonCountSample p = sample_photon_counts(z, s);
                    for (std::size_t m = 0; m < p.counts.size(); ++m) {
                        out << json{{"seed", s}, {"mode", m + 1}, {"value", p.counts[m]}}.dump() << "\n";
                    }
                } else {
                    const double v = sample_homodyne(z, sigma, sample_mode, sample_theta, s);
                    out << json{{"seed", s}, {"mode", sample_mode}, {"value", v}}.dump() << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::CapacityExceeded) return kExitCapacity;
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace symplectiq::cli
