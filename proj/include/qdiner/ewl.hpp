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

// Eisert-Wilkens-Lewenstein quantization of the four-diner game:
//
//   |psi_f> = J^dagger (U_A (x) U_B (x) U_C (x) U_D) J |0000>
//
// with J = (I(x)I(x)I(x)I + i sigma_y(x)sigma_y(x)sigma_y(x)sigma_y) / sqrt(2).

#pragma once

#include "qdiner/game.hpp"
#include "qdiner/statevector.hpp"

namespace qdiner::ewl {

/// J. Maps |0000> to (|0000> + i|1111>)/sqrt(2).
const RegisterOperator &entangler();

/// J^dagger.
const RegisterOperator &disentangler();

/// U(theta, phi) = [[e^{i phi} cos(theta/2), sin(theta/2)],
///                  [-sin(theta/2),          e^{-i phi} cos(theta/2)]]
SingleQubitUnitary strategy_unitary(const Strategy &s);

StateVector final_state(const StrategyProfile &profile);

OutcomeDistribution outcome_distribution(const StrategyProfile &profile);

}  // namespace qdiner::ewl
