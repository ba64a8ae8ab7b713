// Copyright 2026 The qdiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiner/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "qdiner/errors.hpp"
#include "qdiner/ewl.hpp"

namespace qdiner::circuit {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_qubit(std::size_t q, const char *what) {
    if (q >= kCircuitQubits) {
        throw DomainError(std::string(what) + " index " + std::to_string(q) + " outside [0, 3]");
    }
}

void check_gate(const Gate &gate) {
    std::visit(overloaded{
                   [](const U3Gate &g) {
                       check_qubit(g.target, "qubit");
                       if (!std::isfinite(g.theta) || !std::isfinite(g.phi) || !std::isfinite(g.lambda)) {
                           throw DomainError("non-finite U3 angle");
                       }
                   },
                   [](const CzGate &g) {
                       check_qubit(g.a, "qubit");
                       check_qubit(g.b, "qubit");
                       if (g.a == g.b) throw DomainError("cz operands must differ");
                   },
                   [](const CnotGate &g) {
                       check_qubit(g.control, "qubit");
                       check_qubit(g.target, "qubit");
                       if (g.control == g.target) throw DomainError("cx operands must differ");
                   },
                   [](const MeasureGate &g) {
                       check_qubit(g.qubit, "qubit");
                       check_qubit(g.cbit, "classical bit");
                   },
               },
               gate);
}

StateVector apply_gate(const StateVector &state, const Gate &gate) {
    return std::visit(overloaded{
                          [&](const U3Gate &g) {
                              return apply_single_qubit(state, u3_matrix(g.theta, g.phi, g.lambda), g.target);
                          },
                          [&](const CzGate &g) { return apply_controlled(state, ControlledKind::CZ, g.a, g.b); },
                          [&](const CnotGate &g) {
                              return apply_controlled(state, ControlledKind::CNOT, g.control, g.target);
                          },
                          [&](const MeasureGate &) { return state; },
                      },
                      gate);
}

// J = exp(i pi/4 Y(x)Y(x)Y(x)Y), and U3(pi/2, pi/2, -pi/2) = exp(i pi/4 X) on q[0].
// The Clifford frame F = CZ(0,1) CZ(2,3) CX(0,3) CX(0,2) CX(0,1) satisfies
// F X_0 F^dagger = Y(x)Y(x)Y(x)Y, so J = F exp(i pi/4 X_0) F^dagger exactly.
// F^dagger fixes |0000>, so on the game's input only the U3 and the trailing
// CNOT/CZ layer act.
Circuit make_entangler() {
    const std::vector<Gate> gates = {
        CzGate{0, 1},   CzGate{2, 3},   CnotGate{0, 3}, CnotGate{0, 2},
        CnotGate{0, 1}, U3Gate{kPi / 2, kPi / 2, -kPi / 2, 0},
        CnotGate{0, 1}, CnotGate{0, 2}, CnotGate{0, 3}, CzGate{0, 1},
        CzGate{2, 3},
    };
    Circuit c(gates);
    if (!equal_up_to_global_phase(compose(c), ewl::entangler(), kAnalyticTol)) {
        throw std::logic_error("entangler decomposition does not reproduce J");
    }
    return c;
}

}  // namespace

Circuit::Circuit(std::span<const Gate> gates) {
    for (const auto &g : gates) append(g);
}

Circuit &Circuit::append(const Gate &gate) {
    check_gate(gate);
    const bool is_measure = std::holds_alternative<MeasureGate>(gate);
    if (measured_ && !is_measure) throw ValidationError("unitary gate after measurement");
    measured_ = measured_ || is_measure;
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    for (const auto &g : other.gates()) append(g);
    return *this;
}

SingleQubitUnitary u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c};
}

Circuit adjoint(const Circuit &c) {
    Circuit out;
    const auto gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        std::visit(overloaded{
                       [&](const U3Gate &g) { out.append(U3Gate{-g.theta, -g.lambda, -g.phi, g.target}); },
                       [&](const CzGate &g) { out.append(g); },
                       [&](const CnotGate &g) { out.append(g); },
                       [](const MeasureGate &) { throw ValidationError("cannot take the adjoint of a measurement"); },
                   },
                   *it);
    }
    return out;
}

const Circuit &entangler_circuit() {
    static const Circuit c = make_entangler();
    return c;
}

const Circuit &disentangler_circuit() {
    static const Circuit c = adjoint(entangler_circuit());
    return c;
}

U3Gate strategy_gate(const Strategy &s, std::size_t qubit) {
    U3Gate gate{};
    if (auto move = s.move()) {
        switch (*move) {
            case Move::C: gate = {0.0, 0.0, 0.0, qubit}; break;
            case Move::E: gate = {kPi, kPi, kPi, qubit}; break;
            case Move::A: gate = {0.0, -kPi / 2, -kPi / 2, qubit}; break;
        }
    } else {
        // U3(t, pi - p, pi - p) = e^{-ip} U(t, p).
        gate = {s.theta(), kPi - s.phi(), kPi - s.phi(), qubit};
    }
    const auto realized = u3_matrix(gate.theta, gate.phi, gate.lambda);
    const auto wanted = ewl::strategy_unitary(s);
    const Complex phase = std::abs(realized.m00) >= std::abs(realized.m01) ? wanted.m00 / realized.m00
                                                                          : wanted.m01 / realized.m01;
    if ((realized * phase).max_abs_diff(wanted) > kAnalyticTol) {
        throw std::logic_error("U3 realization of " + s.to_string() + " is not U(theta, phi) up to phase");
    }
    return gate;
}

Circuit build_game_circuit(const StrategyProfile &profile) {
    Circuit c = entangler_circuit();
    for (std::size_t q = 0; q < kNumPlayers; ++q) c.append(strategy_gate(profile[q], q));
    c.append(disentangler_circuit());
    for (std::size_t q = 0; q < kNumPlayers; ++q) c.append(MeasureGate{q, q});
    return c;
}

RegisterOperator compose(const Circuit &c) {
    std::vector<Complex> entries(kNumOutcomes * kNumOutcomes);
    for (std::size_t col = 0; col < kNumOutcomes; ++col) {
        StateVector state = StateVector::basis(kCircuitQubits, col);
        for (const auto &g : c.gates()) state = apply_gate(state, g);
        for (std::size_t row = 0; row < kNumOutcomes; ++row) entries[row * kNumOutcomes + col] = state[row];
    }
    return RegisterOperator::from_entries(kCircuitQubits, std::move(entries));
}

OutcomeDistribution simulate_circuit(const Circuit &c) {
    std::array<std::optional<std::size_t>, kCircuitQubits> source{};  // cbit -> qubit
    std::array<bool, kCircuitQubits> qubit_measured{};
    for (const auto &g : c.gates()) {
        if (const auto *m = std::get_if<MeasureGate>(&g)) {
            if (source[m->cbit]) throw ValidationError("classical bit " + std::to_string(m->cbit) + " written twice");
            if (qubit_measured[m->qubit]) {
                throw ValidationError("qubit " + std::to_string(m->qubit) + " measured twice");
            }
            source[m->cbit] = m->qubit;
            qubit_measured[m->qubit] = true;
        }
    }

    StateVector state = StateVector::basis(kCircuitQubits, 0);
    for (const auto &g : c.gates()) state = apply_gate(state, g);
    const auto born = probabilities(state);
    if (!c.has_measurements()) return OutcomeDistribution::from_probabilities(born);

    std::array<double, kNumOutcomes> p{};
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        std::size_t reported = 0;
        for (std::size_t cbit = 0; cbit < kCircuitQubits; ++cbit) {
            if (!source[cbit]) continue;
            const std::size_t bit = (k >> (3 - *source[cbit])) & 1;
            reported |= bit << (3 - cbit);
        }
        p[reported] += born[k];
    }
    return OutcomeDistribution::from_probabilities(p);
}

Histogram sample(const OutcomeDistribution &dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw DomainError("shots must be at least 1");
    std::size_t last = 0;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        if (dist[static_cast<Outcome>(k)] > 0.0) last = k;
    }
    std::mt19937_64 rng(seed);
    Histogram counts{};
    std::uint64_t remaining = shots;
    double mass_left = 1.0;
    // Sequential conditional binomials give an exact multinomial draw; the
    // last non-empty outcome takes whatever is left.
    for (std::size_t k = 0; k < last && remaining > 0; ++k) {
        const double p = dist[static_cast<Outcome>(k)];
        if (p <= 0.0) continue;
        std::binomial_distribution<std::uint64_t> draw(remaining, std::clamp(p / mass_left, 0.0, 1.0));
        counts[k] = draw(rng);
        remaining -= counts[k];
        mass_left -= p;
    }
    counts[last] += remaining;
    return counts;
}

}  // namespace qdiner::circuit
