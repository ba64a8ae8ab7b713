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

#include "qdiner/ewl.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qdiner::ewl {

namespace {

RegisterOperator build_entangler() {
    const auto id = SingleQubitUnitary::identity();
    const auto y = SingleQubitUnitary::pauli_y();
    const RegisterOperator identity4 = tensor4(id, id, id, id);
    const RegisterOperator y4 = tensor4(y, y, y, y);
    const Complex i{0.0, 1.0};
    const double scale = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> entries(identity4.entries().size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        entries[k] = scale * (identity4.entries()[k] + i * y4.entries()[k]);
    }
    return RegisterOperator::from_entries(4, std::move(entries));
}

}  // namespace

const RegisterOperator &entangler() {
    static const RegisterOperator j = build_entangler();
    return j;
}

const RegisterOperator &disentangler() {
    static const RegisterOperator j_dag = entangler().adjoint();
    return j_dag;
}

SingleQubitUnitary strategy_unitary(const Strategy &s) {
    // Named moves are returned exactly rather than through cos/sin rounding.
    if (auto move = s.move()) {
        switch (*move) {
            case Move::C: return SingleQubitUnitary::identity();
            case Move::E: return {0.0, 1.0, -1.0, 0.0};
            case Move::A: return {Complex{0.0, 1.0}, 0.0, 0.0, Complex{0.0, -1.0}};
        }
    }
    const double c = std::cos(s.theta() / 2);
    const double sn = std::sin(s.theta() / 2);
    const Complex phase = std::polar(1.0, s.phi());
    return {phase * c, sn, -sn, std::conj(phase) * c};
}

StateVector final_state(const StrategyProfile &profile) {
    StateVector state = apply_operator(StateVector::basis(4, 0), entangler());
    for (std::size_t q = 0; q < kNumPlayers; ++q) state = apply_single_qubit(state, strategy_unitary(profile[q]), q);
    return apply_operator(state, disentangler());
}

OutcomeDistribution outcome_distribution(const StrategyProfile &profile) {
    return OutcomeDistribution::from_probabilities(probabilities(final_state(profile)));
}

}  // namespace qdiner::ewl
