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

#include "symplectiq/gb_circuit.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

namespace symplectiq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_modes_count(std::size_t modes) {
    if (!is_power_of_two(modes)) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be a power of two, got " + std::to_string(modes));
    }
}

RealMatrix zero_k(std::size_t modes) {
    const auto d = static_cast<Eigen::Index>(2 * modes);
    return RealMatrix::Zero(d, d);
}

Eigen::Index q_index(std::size_t m) { return static_cast<Eigen::Index>(m - 1); }
Eigen::Index p_index(std::size_t m, std::size_t modes) { return static_cast<Eigen::Index>(modes + m - 1); }

void check_mode(std::size_t m, std::size_t modes) {
    if (m < 1 || m > modes) {
        throw Error(ErrorCode::ModeOutOfRange,
                    "mode " + std::to_string(m) + " outside 1.." + std::to_string(modes));
    }
}

void check_condition(const BitCondition &cond, std::size_t n, std::vector<ValidationIssue> &out, std::size_t index) {
    std::set<std::size_t> seen;
    for (const auto &c : cond.clauses) {
        if (c.bit < 1 || c.bit > n) {
            out.push_back({index, ErrorCode::BitOutOfRange,
                           "condition bit " + std::to_string(c.bit) + " outside 1.." + std::to_string(n)});
        }
        if (c.value != 0 && c.value != 1) {
            out.push_back({index, ErrorCode::InvalidArgument, "condition value must be 0 or 1"});
        }
        if (!seen.insert(c.bit).second) {
            out.push_back({index, ErrorCode::DuplicateConditionBit,
                           "condition bit " + std::to_string(c.bit) + " repeated"});
        }
    }
}

}  // namespace

bool BitCondition::mentions(std::size_t bit) const {
    for (const auto &c : clauses) {
        if (c.bit == bit) return true;
    }
    return false;
}

std::uint64_t BitCondition::mask() const {
    std::uint64_t out = 0;
    for (const auto &c : clauses) out |= std::uint64_t{1} << (c.bit - 1);
    return out;
}

std::uint64_t BitCondition::value_mask() const {
    std::uint64_t out = 0;
    for (const auto &c : clauses) {
        if (c.value == 1) out |= std::uint64_t{1} << (c.bit - 1);
    }
    return out;
}

bool BitCondition::matches(std::uint64_t mode_index) const {
    return (mode_index & mask()) == value_mask();
}

BitCondition condition_for_mode(std::size_t m, std::size_t n) {
    BitCondition out;
    for (std::size_t k = 1; k <= n; ++k) {
        out.clauses.push_back({k, static_cast<int>(((m - 1) >> (k - 1)) & 1U)});
    }
    return out;
}

bool is_global(const GbGate &g) {
    return std::holds_alternative<gb::GlobalPhase>(g) || std::holds_alternative<gb::GlobalBeamsplitter>(g) ||
           std::holds_alternative<gb::GlobalSqueeze>(g);
}

bool is_squeeze(const GbGate &g) {
    return std::holds_alternative<gb::Squeeze>(g) || std::holds_alternative<gb::GlobalSqueeze>(g);
}

const char *gate_name(const GbGate &g) {
    static constexpr const char *kNames[] = {"phase", "bs", "sq", "gphase", "gbs", "gsq", "disp"};
    return kNames[g.index()];
}

std::size_t GbCircuit::bits() const {
    check_modes_count(modes);
    return static_cast<std::size_t>(std::countr_zero(modes));
}

std::vector<ValidationIssue> validate(const GbCircuit &c) {
    std::vector<ValidationIssue> out;
    if (!is_power_of_two(c.modes)) {
        out.push_back({0, ErrorCode::InvalidArgument, "mode count must be a power of two"});
        return out;
    }
    const std::size_t n = c.bits();
    const std::size_t modes = c.modes;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        auto mode_ok = [&](std::size_t m) {
            if (m < 1 || m > modes) {
                out.push_back({i, ErrorCode::ModeOutOfRange,
                               "mode " + std::to_string(m) + " outside 1.." + std::to_string(modes)});
            }
        };
        auto finite = [&](double v, const char *what) {
            if (!std::isfinite(v)) out.push_back({i, ErrorCode::InvalidArgument, std::string(what) + " not finite"});
        };
        std::visit(overloaded{
                       [&](const gb::Phase &g) {
                           mode_ok(g.m);
                           finite(g.t, "t");
                       },
                       [&](const gb::Beamsplitter &g) {
                           mode_ok(g.m);
                           mode_ok(g.mp);
                           finite(g.t, "t");
                           if (g.m == g.mp) {
                               out.push_back({i, ErrorCode::ModesMustDiffer,
                                              "beamsplitter modes must differ, got " + std::to_string(g.m) +
                                                  " twice"});
                           }
                       },
                       [&](const gb::Squeeze &g) {
                           mode_ok(g.m);
                           finite(g.t, "t");
                       },
                       [&](const gb::GlobalPhase &g) {
                           check_condition(g.cond, n, out, i);
                           finite(g.t, "t");
                       },
                       [&](const gb::GlobalBeamsplitter &g) {
                           check_condition(g.cond, n, out, i);
                           finite(g.t, "t");
                           if (g.l < 1 || g.l > n) {
                               out.push_back({i, ErrorCode::BitOutOfRange,
                                              "pairing bit " + std::to_string(g.l) + " outside 1.." +
                                                  std::to_string(n)});
                           } else if (g.cond.mentions(g.l)) {
                               out.push_back({i, ErrorCode::PairingBitInCondition,
                                              "pairing bit " + std::to_string(g.l) +
                                                  " cannot appear in the condition"});
                           }
                       },
                       [&](const gb::GlobalSqueeze &g) {
                           check_condition(g.cond, n, out, i);
                           finite(g.t, "t");
                       },
                       [&](const gb::Displacement &g) {
                           mode_ok(g.m);
                           finite(g.dq, "dq");
                           finite(g.dp, "dp");
                       },
                   },
                   c.gates[i]);
    }
    return out;
}

void require_valid(const GbCircuit &c) {
    const auto issues = validate(c);
    if (!issues.empty()) {
        const auto &e = issues.front();
        throw Error(e.code, "gate " + std::to_string(e.gate_index) + ": " + e.message);
    }
}

std::vector<GbGate> expand_global(const GbGate &g, std::size_t modes) {
    check_modes_count(modes);
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(modes));
    auto check_cond = [&](const BitCondition &cond) {
        std::vector<ValidationIssue> issues;
        check_condition(cond, n, issues, 0);
        if (!issues.empty()) throw Error(issues.front().code, issues.front().message);
    };
    std::vector<GbGate> out;
    std::visit(overloaded{
                   [&](const gb::GlobalPhase &x) {
                       check_cond(x.cond);
                       for (std::uint64_t r = 0; r < modes; ++r) {
                           if (x.cond.matches(r)) out.emplace_back(gb::Phase{r + 1, x.t});
                       }
                   },
                   [&](const gb::GlobalBeamsplitter &x) {
                       check_cond(x.cond);
                       if (x.l < 1 || x.l > n) {
                           throw Error(ErrorCode::BitOutOfRange, "pairing bit outside 1.." + std::to_string(n));
                       }
                       if (x.cond.mentions(x.l)) {
                           throw Error(ErrorCode::PairingBitInCondition, "pairing bit appears in the condition");
                       }
                       const std::uint64_t lbit = std::uint64_t{1} << (x.l - 1);
                       for (std::uint64_t r = 0; r < modes; ++r) {
                           if ((r & lbit) == 0 && x.cond.matches(r)) {
                               out.emplace_back(gb::Beamsplitter{r + 1, (r | lbit) + 1, x.t});
                           }
                       }
                   },
                   [&](const gb::GlobalSqueeze &x) {
                       check_cond(x.cond);
                       for (std::uint64_t r = 0; r < modes; ++r) {
                           if (x.cond.matches(r)) out.emplace_back(gb::Squeeze{r + 1, x.t, x.sign});
                       }
                   },
                   [&](const auto &local) { out.emplace_back(local); },
               },
               g);
    return out;
}

double gate_time(const GbGate &g) {
    return std::visit(overloaded{
                          [](const gb::Displacement &) -> double {
                              throw Error(ErrorCode::DisplacementUnsupported,
                                          "displacement has no quadratic generator");
                          },
                          [](const auto &x) -> double { return x.t; },
                      },
                      g);
}

GeneratorMatrix generator_of(const GbGate &g, std::size_t modes) {
    check_modes_count(modes);
    return std::visit(
        overloaded{
            [&](const gb::Phase &x) {
                check_mode(x.m, modes);
                RealMatrix k = zero_k(modes);
                k(q_index(x.m), q_index(x.m)) = 2.0;
                k(p_index(x.m, modes), p_index(x.m, modes)) = 2.0;
                return GeneratorMatrix(std::move(k), GeneratorKind::ParticlePreserving);
            },
            [&](const gb::Beamsplitter &x) {
                check_mode(x.m, modes);
                check_mode(x.mp, modes);
                if (x.m == x.mp) throw Error(ErrorCode::ModesMustDiffer, "beamsplitter modes must differ");
                // 2 iY (x) (|m><m'| - |m'><m|)
                RealMatrix k = zero_k(modes);
                const auto qm = q_index(x.m), qn = q_index(x.mp);
                const auto pm = p_index(x.m, modes), pn = p_index(x.mp, modes);
                k(qm, pn) = k(pn, qm) = 2.0;
                k(qn, pm) = k(pm, qn) = -2.0;
                return GeneratorMatrix(std::move(k), GeneratorKind::ParticlePreserving);
            },
            [&](const gb::Squeeze &x) {
                check_mode(x.m, modes);
                RealMatrix k = zero_k(modes);
                const double v = 2.0 * sign_value(x.sign);
                k(q_index(x.m), p_index(x.m, modes)) = v;
                k(p_index(x.m, modes), q_index(x.m)) = v;
                return GeneratorMatrix(std::move(k), GeneratorKind::NonParticlePreserving);
            },
            [&](const gb::Displacement &) -> GeneratorMatrix {
                throw Error(ErrorCode::DisplacementUnsupported,
                            "displacement is linear in the quadratures and has no quadratic generator");
            },
            [&](const auto &global) {
                RealMatrix k = zero_k(modes);
                for (const auto &local : expand_global(GbGate(global), modes)) {
                    k += generator_of(local, modes).matrix();
                }
                const GeneratorKind kind = std::holds_alternative<gb::GlobalSqueeze>(GbGate(global))
                                               ? GeneratorKind::NonParticlePreserving
                                               : GeneratorKind::ParticlePreserving;
                return GeneratorMatrix(std::move(k), kind);
            },
        },
        g);
}

RealMatrix circuit_propagator(const GbCircuit &c) {
    require_valid(c);
    const auto d = static_cast<Eigen::Index>(2 * c.modes);
    RealMatrix q = RealMatrix::Identity(d, d);
    for (const auto &g : c.gates) {
        q = propagator(generator_of(g, c.modes), gate_time(g)).matrix() * q;
    }
    return q;
}

MomentVector propagate_mean(const GbCircuit &c, const MomentVector &z) {
    require_valid(c);
    if (z.modes() != c.modes) {
        throw Error(ErrorCode::DimensionMismatch, "moment vector does not match circuit mode count");
    }
    MomentVector out = z;
    for (const auto &g : c.gates) {
        out = evolve_mean(out, generator_of(g, c.modes), gate_time(g));
    }
    return out;
}

}  // namespace symplectiq
