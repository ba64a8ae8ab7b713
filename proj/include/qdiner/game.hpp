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

// Vocabulary shared by every layer of the four-diner game: players, moves,
// strategies, profiles and measurement outcomes.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdiner {

inline constexpr std::size_t kNumPlayers = 4;
inline constexpr std::size_t kNumOutcomes = 16;

enum class Player : std::uint8_t { Alice = 0, Bob = 1, Colin = 2, Doug = 3 };

inline constexpr std::array<Player, kNumPlayers> kAllPlayers = {Player::Alice, Player::Bob, Player::Colin,
                                                                Player::Doug};

constexpr std::size_t index_of(Player p) noexcept { return static_cast<std::size_t>(p); }
std::string_view player_name(Player p);
/// Single-letter id A/B/C/D.
char player_letter(Player p);
/// Parses A/B/C/D (or the full name, case-insensitive).
Player parse_player(std::string_view text);

/// The three named moves. Enumerator order is the canonical table order.
enum class Move : std::uint8_t { C = 0, E = 1, A = 2 };

inline constexpr std::array<Move, 2> kClassicalMoves = {Move::C, Move::E};
inline constexpr std::array<Move, 3> kQuantumMoves = {Move::C, Move::E, Move::A};

char move_letter(Move m);
Move parse_move(char letter);

/// Either a named move or an explicit U(theta, phi) with theta in [0, pi] and
/// phi in [0, pi/2]. Named moves carry their fixed angles:
/// C = U(0, 0), E = U(pi, 0), A = U(0, pi/2).
class Strategy {
   public:
    static Strategy named(Move move);
    /// Throws DomainError outside the closed angle domain.
    static Strategy parametric(double theta, double phi);

    bool is_named() const noexcept { return move_.has_value(); }
    std::optional<Move> move() const noexcept { return move_; }
    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    /// "C", "E", "A", or "theta=<t>:phi=<p>".
    std::string to_string() const;

    bool operator==(const Strategy &) const = default;

   private:
    Strategy(std::optional<Move> move, double theta, double phi) : move_(move), theta_(theta), phi_(phi) {}

    std::optional<Move> move_;
    double theta_;
    double phi_;
};

/// Strategies in player order (Alice, Bob, Colin, Doug).
using StrategyProfile = std::array<Strategy, kNumPlayers>;
/// Profile restricted to named moves; the unit of equilibrium analysis.
using NamedProfile = std::array<Move, kNumPlayers>;

StrategyProfile to_strategy_profile(const NamedProfile &profile);
/// "CEAA".
std::string profile_letters(const NamedProfile &profile);
/// Parses exactly four letters from {C, E, A}.
NamedProfile parse_named_profile(std::string_view letters);

/// Outcome index k in [0, 16); bit (3 - i) is player i's measured bit.
using Outcome = std::uint8_t;

constexpr int outcome_bit(Outcome k, Player p) noexcept { return (k >> (3 - index_of(p))) & 1; }
constexpr int expensive_count(Outcome k) noexcept {
    return ((k >> 3) & 1) + ((k >> 2) & 1) + ((k >> 1) & 1) + (k & 1);
}
/// Big-endian label, Alice leftmost: outcome 5 -> "0101".
std::string outcome_label(Outcome k);
Outcome parse_outcome_label(std::string_view label);

/// Probabilities over the 16 Z-basis outcomes; non-negative, summing to 1.
class OutcomeDistribution {
   public:
    /// Validates: 16 entries, each in [0, 1] (within 1e-9), sum 1 within 1e-9.
    static OutcomeDistribution from_probabilities(std::span<const double> probs);
    static OutcomeDistribution point_mass(Outcome k);

    double operator[](Outcome k) const { return p_.at(k); }
    const std::array<double, kNumOutcomes> &probabilities() const noexcept { return p_; }

    /// Outcome of highest probability (lowest index on ties).
    Outcome mode() const;
    double total_variation(const OutcomeDistribution &other) const;

   private:
    explicit OutcomeDistribution(const std::array<double, kNumOutcomes> &p) : p_(p) {}
    std::array<double, kNumOutcomes> p_;
};

}  // namespace qdiner
