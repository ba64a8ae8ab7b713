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

#include "qdiner/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qdiner/errors.hpp"
#include "qdiner/ewl.hpp"

namespace qdiner {

namespace {

constexpr std::size_t kProfileCodes = 81;

std::size_t code_of(const NamedProfile &p) {
    std::size_t code = 0;
    for (Move m : p) code = code * 3 + static_cast<std::size_t>(m);
    return code;
}

// Profile -> record lookup, validated to cover strategy_set^4.
class RecordIndex {
   public:
    RecordIndex(std::span<const ProfileRecord> records, std::span<const Move> strategy_set) : records_(records) {
        slots_.fill(kMissing);
        for (std::size_t r = 0; r < records.size(); ++r) {
            const std::size_t code = code_of(records[r].profile);
            if (slots_[code] != kMissing) {
                throw ValidationError("duplicate record for profile " + profile_letters(records[r].profile));
            }
            slots_[code] = r;
        }
        if (strategy_set.empty()) throw ValidationError("empty strategy set");
        for_each_profile(strategy_set, [&](const NamedProfile &p) {
            if (slots_[code_of(p)] == kMissing) {
                throw ValidationError("records do not cover profile " + profile_letters(p));
            }
        });
    }

    const ProfileRecord &operator[](const NamedProfile &p) const {
        const std::size_t slot = slots_[code_of(p)];
        if (slot == kMissing) throw DomainError("no record for profile " + profile_letters(p));
        return records_[slot];
    }

    template <typename Fn>
    static void for_each_profile(std::span<const Move> set, Fn &&fn) {
        for (Move a : set)
            for (Move b : set)
                for (Move c : set)
                    for (Move d : set) fn(NamedProfile{a, b, c, d});
    }

   private:
    static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    std::span<const ProfileRecord> records_;
    std::array<std::size_t, kProfileCodes> slots_{};
};

std::vector<Opponents> opponent_combinations(std::span<const Move> set) {
    std::vector<Opponents> out;
    for (Move a : set)
        for (Move b : set)
            for (Move c : set) out.push_back({a, b, c});
    return out;
}

bool all_equal(const PayoffVector &v) {
    return std::ranges::all_of(v, [&](double x) { return std::abs(x - v[0]) <= kTieTol; });
}

bool dominates(const PayoffVector &q, const PayoffVector &p) {
    bool strict = false;
    for (std::size_t i = 0; i < kNumPlayers; ++i) {
        if (q[i] < p[i] - kTieTol) return false;
        if (q[i] > p[i] + kTieTol) strict = true;
    }
    return strict;
}

}  // namespace

std::string_view model_name(Model m) { return m == Model::Classical ? "classical" : "quantum"; }

Model parse_model(std::string_view text) {
    if (text == "classical") return Model::Classical;
    if (text == "quantum") return Model::Quantum;
    throw DomainError("unknown model '" + std::string(text) + "'");
}

std::vector<ProfileRecord> enumerate_table(Model model, const PayoffTable &table) {
    std::vector<ProfileRecord> records;
    const std::span<const Move> set =
        model == Model::Classical ? std::span<const Move>(kClassicalMoves) : std::span<const Move>(kQuantumMoves);
    RecordIndex::for_each_profile(set, [&](const NamedProfile &p) {
        OutcomeDistribution dist = OutcomeDistribution::point_mass(0);
        if (model == Model::Classical) {
            Outcome k = 0;
            for (Move m : p) k = static_cast<Outcome>((k << 1) | (m == Move::E ? 1 : 0));
            dist = OutcomeDistribution::point_mass(k);
        } else {
            dist = ewl::outcome_distribution(to_strategy_profile(p));
        }
        records.push_back({p, dist, expected_payoffs(dist, table)});
    });
    return records;
}

std::vector<Move> strategy_set_of(std::span<const ProfileRecord> records) {
    std::array<bool, 3> seen{};
    for (const auto &r : records) {
        for (Move m : r.profile) seen[static_cast<std::size_t>(m)] = true;
    }
    std::vector<Move> out;
    for (Move m : kQuantumMoves) {
        if (seen[static_cast<std::size_t>(m)]) out.push_back(m);
    }
    return out;
}

NamedProfile with_player(const Opponents &opponents, Player player, Move move) {
    NamedProfile p{};
    std::size_t next = 0;
    for (Player q : kAllPlayers) p[index_of(q)] = q == player ? move : opponents[next++];
    return p;
}

namespace {

// strict: every other move must lose by more than kTieTol.
std::vector<NamedProfile> equilibria(std::span<const ProfileRecord> records, std::span<const Move> strategy_set,
                                     bool strict) {
    const RecordIndex index(records, strategy_set);
    std::vector<NamedProfile> out;
    for (const auto &rec : records) {
        const bool in_set = std::ranges::all_of(
            rec.profile, [&](Move m) { return std::ranges::find(strategy_set, m) != strategy_set.end(); });
        if (!in_set) continue;
        bool stable = true;
        for (std::size_t i = 0; i < kNumPlayers && stable; ++i) {
            for (Move alt : strategy_set) {
                if (alt == rec.profile[i]) continue;
                NamedProfile dev = rec.profile;
                dev[i] = alt;
                const double gain = index[dev].payoffs[i] - rec.payoffs[i];
                if (strict ? gain >= -kTieTol : gain > kTieTol) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) out.push_back(rec.profile);
    }
    return out;
}

}  // namespace

std::vector<NamedProfile> find_nash(std::span<const ProfileRecord> records, std::span<const Move> strategy_set) {
    return equilibria(records, strategy_set, false);
}

std::vector<NamedProfile> find_strict_nash(std::span<const ProfileRecord> records,
                                           std::span<const Move> strategy_set) {
    return equilibria(records, strategy_set, true);
}

std::vector<NamedProfile> find_pareto_standard(std::span<const ProfileRecord> records) {
    std::vector<NamedProfile> out;
    for (const auto &p : records) {
        const bool dominated =
            std::ranges::any_of(records, [&](const ProfileRecord &q) { return dominates(q.payoffs, p.payoffs); });
        if (!dominated) out.push_back(p.profile);
    }
    return out;
}

std::vector<NamedProfile> find_symmetric_optima(std::span<const ProfileRecord> records) {
    std::optional<double> best;
    for (const auto &r : records) {
        if (all_equal(r.payoffs) && (!best || r.payoffs[0] > *best)) best = r.payoffs[0];
    }
    std::vector<NamedProfile> out;
    if (!best) return out;
    for (const auto &r : records) {
        if (all_equal(r.payoffs) && std::abs(r.payoffs[0] - *best) <= kTieTol) out.push_back(r.profile);
    }
    return out;
}

BestResponse best_response(std::span<const ProfileRecord> records, Player player, const Opponents &opponents) {
    const auto set = strategy_set_of(records);
    for (Move m : opponents) {
        if (std::ranges::find(set, m) == set.end()) {
            throw DomainError(std::string("opponent move ") + move_letter(m) + " is not in the analyzed set");
        }
    }
    const RecordIndex index(records, set);
    const std::size_t i = index_of(player);
    BestResponse out;
    out.payoff = -std::numeric_limits<double>::infinity();
    for (Move m : set) out.payoff = std::max(out.payoff, index[with_player(opponents, player, m)].payoffs[i]);
    for (Move m : set) {
        if (index[with_player(opponents, player, m)].payoffs[i] >= out.payoff - kTieTol) out.moves.push_back(m);
    }
    return out;
}

std::array<std::optional<Move>, kNumPlayers> dominant_strategies(std::span<const ProfileRecord> records) {
    const auto set = strategy_set_of(records);
    const RecordIndex index(records, set);
    const auto combos = opponent_combinations(set);
    std::array<std::optional<Move>, kNumPlayers> out{};
    for (Player player : kAllPlayers) {
        const std::size_t i = index_of(player);
        for (Move m : set) {
            bool dominant = set.size() > 1;
            for (Move alt : set) {
                if (alt == m) continue;
                bool weakly = true;
                bool strictly_once = false;
                for (const auto &opp : combos) {
                    const double um = index[with_player(opp, player, m)].payoffs[i];
                    const double ua = index[with_player(opp, player, alt)].payoffs[i];
                    if (um < ua - kTieTol) weakly = false;
                    if (um > ua + kTieTol) strictly_once = true;
                }
                if (!weakly || !strictly_once) {
                    dominant = false;
                    break;
                }
            }
            if (dominant) {
                out[i] = m;
                break;
            }
        }
    }
    return out;
}

std::vector<Deviation> unilateral_deviations(std::span<const ProfileRecord> records, const NamedProfile &at) {
    const auto set = strategy_set_of(records);
    const RecordIndex index(records, set);
    const ProfileRecord &base = index[at];
    std::vector<Deviation> out;
    for (Player player : kAllPlayers) {
        const std::size_t i = index_of(player);
        for (Move alt : set) {
            NamedProfile dev = at;
            dev[i] = alt;
            out.push_back({player, alt, index[dev].payoffs[i], base.payoffs[i]});
        }
    }
    return out;
}

EquilibriumReport analyze(std::span<const ProfileRecord> records) {
    const auto set = strategy_set_of(records);
    EquilibriumReport report;
    report.nash = find_nash(records, set);
    report.strict_nash = find_strict_nash(records, set);
    report.pareto_standard = find_pareto_standard(records);
    report.symmetric_optima = find_symmetric_optima(records);
    report.dominant = dominant_strategies(records);
    for (Player player : kAllPlayers) {
        for (const auto &opp : opponent_combinations(set)) {
            report.best_responses.push_back({player, opp, best_response(records, player, opp)});
        }
    }
    return report;
}

const ProfileRecord &find_record(std::span<const ProfileRecord> records, const NamedProfile &profile) {
    auto it = std::ranges::find(records, profile, &ProfileRecord::profile);
    if (it == records.end()) throw DomainError("no record for profile " + profile_letters(profile));
    return *it;
}

}  // namespace qdiner
