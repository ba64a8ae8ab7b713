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
#include <string>
#include <string_view>

#include "qdiner/game.hpp"

namespace qdiner {

/// Utilities in player order (Alice, Bob, Colin, Doug).
using PayoffVector = std::array<double, kNumPlayers>;

enum class Dish { Cheap, Expensive };

/// Per-outcome utilities for the four players.
class PayoffTable {
   public:
    /// The split-bill table. Doug's column is
    ///   0000:6 0001:8 0010:4 0011:4 0100:4 0101:4 0110:3 0111:3
    ///   1000:4 1001:4 1010:3 1011:3 1100:3 1101:3 1110:0 1111:1
    /// and the other columns are its images under swapping players.
    static const PayoffTable &builtin();

    /// Symmetric game u_i(s) = f(s_i, #others ordering E).
    /// cheap[k] = f(C, k), expensive[k] = f(E, k), k = 0..3.
    static PayoffTable from_symmetric(const std::array<double, 4> &cheap, const std::array<double, 4> &expensive);

    /// Explicit table; rows indexed by outcome. With require_symmetric the
    /// rows must be generated by some f(own, count) or ValidationError names
    /// the first offending outcome.
    static PayoffTable from_outcomes(const std::array<PayoffVector, kNumOutcomes> &rows,
                                     bool require_symmetric = false);

    const PayoffVector &at(Outcome k) const { return rows_.at(k); }
    double utility(Outcome k, Player p) const { return rows_.at(k)[index_of(p)]; }
    const std::array<PayoffVector, kNumOutcomes> &rows() const noexcept { return rows_; }

    /// Empty string when symmetric, else the label of the first outcome that
    /// breaks u_i(s) = f(s_i, sum_{j != i} s_j).
    std::string symmetry_violation() const;
    bool is_symmetric() const { return symmetry_violation().empty(); }

    double min_utility() const;
    double max_utility() const;

    bool operator==(const PayoffTable &) const = default;

   private:
    explicit PayoffTable(const std::array<PayoffVector, kNumOutcomes> &rows) : rows_(rows) {}
    std::array<PayoffVector, kNumOutcomes> rows_;
};

/// f(own, others_expensive) for the built-in game:
/// f(C, .) = (6, 4, 3, 0), f(E, .) = (8, 4, 3, 1).
double symmetric_payoff(Dish own, int others_expensive);

/// Pf_i = sum_s p(s) u_i(s).
PayoffVector expected_payoffs(const OutcomeDistribution &dist, const PayoffTable &table);

/// Parses the JSON payoff configuration:
///   {"outcomes": {"0000": [6,6,6,6], ...}, "require_symmetric": true}
/// or
///   {"symmetric": {"C": [6,4,3,0], "E": [8,4,3,1]}}
/// Throws ParseError naming the offending key.
PayoffTable load_table(std::string_view config_text);

/// Inverse of load_table in the explicit "outcomes" form.
std::string dump_table(const PayoffTable &table);

}  // namespace qdiner
