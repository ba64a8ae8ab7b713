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

#include "qdiner/game.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qdiner/errors.hpp"
#include "qdiner/statevector.hpp"

namespace qdiner {

namespace {

std::string shortest(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

}  // namespace

std::string_view player_name(Player p) {
    switch (p) {
        case Player::Alice: return "Alice";
        case Player::Bob: return "Bob";
        case Player::Colin: return "Colin";
        case Player::Doug: return "Doug";
    }
    throw DomainError("invalid player");
}

char player_letter(Player p) { return player_name(p).front(); }

Player parse_player(std::string_view text) {
    std::string lower;
    for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (Player p : kAllPlayers) {
        std::string name(player_name(p));
        std::ranges::transform(name, name.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (lower == name || lower == name.substr(0, 1)) return p;
    }
    throw DomainError("unknown player '" + std::string(text) + "'");
}

char move_letter(Move m) {
    switch (m) {
        case Move::C: return 'C';
        case Move::E: return 'E';
        case Move::A: return 'A';
    }
    throw DomainError("invalid move");
}

Move parse_move(char letter) {
    switch (letter) {
        case 'C': return Move::C;
        case 'E': return Move::E;
        case 'A': return Move::A;
        default: throw DomainError(std::string("unknown move '") + letter + "'");
    }
}

Strategy Strategy::named(Move move) {
    switch (move) {
        case Move::C: return Strategy(move, 0.0, 0.0);
        case Move::E: return Strategy(move, std::numbers::pi, 0.0);
        case Move::A: return Strategy(move, 0.0, std::numbers::pi / 2);
    }
    throw DomainError("invalid move");
}

Strategy Strategy::parametric(double theta, double phi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw DomainError("theta=" + shortest(theta) + " outside [0, pi]");
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi / 2) {
        throw DomainError("phi=" + shortest(phi) + " outside [0, pi/2]");
    }
    return Strategy(std::nullopt, theta, phi);
}

std::string Strategy::to_string() const {
    if (move_) return std::string(1, move_letter(*move_));
    return "theta=" + shortest(theta_) + ":phi=" + shortest(phi_);
}

StrategyProfile to_strategy_profile(const NamedProfile &profile) {
    return {Strategy::named(profile[0]), Strategy::named(profile[1]), Strategy::named(profile[2]),
            Strategy::named(profile[3])};
}

std::string profile_letters(const NamedProfile &profile) {
    std::string out;
    for (Move m : profile) out.push_back(move_letter(m));
    return out;
}

NamedProfile parse_named_profile(std::string_view letters) {
    if (letters.size() != kNumPlayers) {
        throw DomainError("profile '" + std::string(letters) + "' must have exactly 4 letters");
    }
    NamedProfile out{};
    for (std::size_t i = 0; i < kNumPlayers; ++i) out[i] = parse_move(letters[i]);
    return out;
}

std::string outcome_label(Outcome k) {
    if (k >= kNumOutcomes) throw DomainError("outcome " + std::to_string(k) + " out of range");
    std::string s(4, '0');
    for (std::size_t i = 0; i < 4; ++i) s[i] = ((k >> (3 - i)) & 1) ? '1' : '0';
    return s;
}

Outcome parse_outcome_label(std::string_view label) {
    if (label.size() != 4 || !std::ranges::all_of(label, [](char c) { return c == '0' || c == '1'; })) {
        throw DomainError("bad outcome label '" + std::string(label) + "'");
    }
    Outcome k = 0;
    for (char c : label) k = static_cast<Outcome>((k << 1) | (c == '1'));
    return k;
}

OutcomeDistribution OutcomeDistribution::from_probabilities(std::span<const double> probs) {
    if (probs.size() != kNumOutcomes) {
        throw ValidationError("distribution needs 16 probabilities, got " + std::to_string(probs.size()));
    }
    std::array<double, kNumOutcomes> p{};
    double total = 0.0;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        const double v = probs[k];
        if (!std::isfinite(v) || v < -kAnalyticTol || v > 1.0 + kAnalyticTol) {
            throw ValidationError("probability of " + outcome_label(static_cast<Outcome>(k)) + " out of [0, 1]");
        }
        p[k] = std::clamp(v, 0.0, 1.0);
        total += v;
    }
    if (std::abs(total - 1.0) > kAnalyticTol) {
        throw ValidationError("probabilities sum to " + shortest(total) + ", not 1");
    }
    return OutcomeDistribution(p);
}

OutcomeDistribution OutcomeDistribution::point_mass(Outcome k) {
    if (k >= kNumOutcomes) throw DomainError("outcome " + std::to_string(k) + " out of range");
    std::array<double, kNumOutcomes> p{};
    p[k] = 1.0;
    return OutcomeDistribution(p);
}

Outcome OutcomeDistribution::mode() const {
    return static_cast<Outcome>(std::ranges::max_element(p_) - p_.begin());
}

double OutcomeDistribution::total_variation(const OutcomeDistribution &other) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) sum += std::abs(p_[k] - other.p_[k]);
    return 0.5 * sum;
}

}  // namespace qdiner
