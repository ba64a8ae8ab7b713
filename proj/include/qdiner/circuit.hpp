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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qdiner/game.hpp"
#include "qdiner/statevector.hpp"

namespace qdiner::circuit {

inline constexpr std::size_t kCircuitQubits = 4;

struct U3Gate {
    double theta;
    double phi;
    double lambda;
    std::size_t target;
    bool operator==(const U3Gate &) const = default;
};

struct CzGate {
    std::size_t a;
    std::size_t b;
    bool operator==(const CzGate &) const = default;
};

struct CnotGate {
    std::size_t control;
    std::size_t target;
    bool operator==(const CnotGate &) const = default;
};

struct MeasureGate {
    std::size_t qubit;
    std::size_t cbit;
    bool operator==(const MeasureGate &) const = default;
};

using Gate = std::variant<U3Gate, CzGate, CnotGate, MeasureGate>;

/// Ordered gate list on four qubits. Measurements may only follow the
/// unitary part; append() rejects anything else.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::span<const Gate> gates);

    Circuit &append(const Gate &gate);
    Circuit &append(const Circuit &other);

    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool has_measurements() const noexcept { return measured_; }

    bool operator==(const Circuit &) const = default;

   private:
    std::vector<Gate> gates_;
    bool measured_ = false;
};

/// U3(t, p, l) = [[cos(t/2),            -e^{il} sin(t/2)],
///                [e^{ip} sin(t/2),  e^{i(p+l)} cos(t/2)]]
SingleQubitUnitary u3_matrix(double theta, double phi, double lambda);

/// Reverse order, each gate replaced by its adjoint; U3(t, p, l)^dagger is
/// U3(-t, -l, -p). Measurements are not invertible and are rejected.
Circuit adjoint(const Circuit &c);

/// Gate sequence equal to ewl::entangler(); checked against it on first use.
const Circuit &entangler_circuit();
const Circuit &disentangler_circuit();

/// The per-player U3 used inside the game circuit.
U3Gate strategy_gate(const Strategy &s, std::size_t qubit);

/// Entangler, one U3 per player on q[0..3], disentangler, measure q[i] -> c[i].
Circuit build_game_circuit(const StrategyProfile &profile);

/// Dense unitary of the circuit's unitary gates (measurements ignored).
RegisterOperator compose(const Circuit &c);

/// Exact Born distribution after running the unitary part on |0000>. When the
/// circuit measures, outcome bit c[j] reports the qubit measured into it and
/// unmeasured classical bits read 0.
OutcomeDistribution simulate_circuit(const Circuit &c);

using Histogram = std::array<std::uint64_t, kNumOutcomes>;

/// Multinomial draw of `shots` outcomes; deterministic for a given seed.
Histogram sample(const OutcomeDistribution &dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace qdiner::circuit
