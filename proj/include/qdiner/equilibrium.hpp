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

// Exhaustive pure-strategy analysis over the named moves. Functions that
// compare a profile with its unilateral deviations (Nash, best responses,
// dominance) require the records to cover the full product of the moves they
// mention. Results keep the record list's (lexicographic) order.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qdiner/game.hpp"
#include "qdiner/payoff.hpp"

namespace qdiner {

/// Ties in payoffs closer than this are treated as equal.
inline constexpr double kTieTol = 1e-9;

enum class Model { Classical, Quantum };

std::string_view model_name(Model m);
Model parse_model(std::string_view text);

struct ProfileRecord {
    NamedProfile profile;
    OutcomeDistribution distribution;
    PayoffVector payoffs;
};

/// Classical: {C,E}^4 as deterministic outcomes (16 rows).
/// Quantum: {C,E,A}^4 through the EWL pipeline (81 rows).
/// Rows are lexicographic in (Alice, Bob, Colin, Doug) with C < E < A.
std::vector<ProfileRecord> enumerate_table(Model model, const PayoffTable &table);

/// Moves appearing in the records, in C < E < A order.
std::vector<Move> strategy_set_of(std::span<const ProfileRecord> records);

std::vector<NamedProfile> find_nash(std::span<const ProfileRecord> records, std::span<const Move> strategy_set);

/// Standard Pareto efficiency: no other row is at least as good for all
/// players and strictly better for one.
/// Profiles where every unilateral switch to a different move loses by more
/// than kTieTol. A subset of find_nash.
std::vector<NamedProfile> find_strict_nash(std::span<const ProfileRecord> records,
                                           std::span<const Move> strategy_set);
std::vector<NamedProfile> find_pareto_standard(std::span<const ProfileRecord> records);

/// Rows whose payoff vector is (v, v, v, v) with v maximal among such rows.
std::vector<NamedProfile> find_symmetric_optima(std::span<const ProfileRecord> records);

/// Opponents of `player`, listed in player order.
using Opponents = std::array<Move, kNumPlayers - 1>;

NamedProfile with_player(const Opponents &opponents, Player player, Move move);

struct BestResponse {
    std::vector<Move> moves;  // all maximizers within kTieTol
    double payoff = 0.0;
};

BestResponse best_response(std::span<const ProfileRecord> records, Player player, const Opponents &opponents);

/// Weakly dominant move per player, if one exists.
std::array<std::optional<Move>, kNumPlayers> dominant_strategies(std::span<const ProfileRecord> records);

struct Deviation {
    Player player;
    Move move;
    double payoff;    // deviator's payoff after switching to `move`
    double baseline;  // deviator's payoff at the reference profile
    bool profitable() const { return payoff > baseline + kTieTol; }
};

/// The deviator's payoff for every (player, move) pair, the move already
/// played included, so a 3-move table yields 12 entries.
std::vector<Deviation> unilateral_deviations(std::span<const ProfileRecord> records, const NamedProfile &at);

struct BestResponseEntry {
    Player player;
    Opponents opponents;
    BestResponse response;
};

struct EquilibriumReport {
    std::vector<NamedProfile> nash;
    std::vector<NamedProfile> strict_nash;
    std::vector<NamedProfile> pareto_standard;
    std::vector<NamedProfile> symmetric_optima;
    std::array<std::optional<Move>, kNumPlayers> dominant;
    std::vector<BestResponseEntry> best_responses;
};

EquilibriumReport analyze(std::span<const ProfileRecord> records);

const ProfileRecord &find_record(std::span<const ProfileRecord> records, const NamedProfile &profile);

}  // namespace qdiner
