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

#include "qdiner/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "qdiner/errors.hpp"
#include "qdiner/statevector.hpp"

namespace qdiner {

namespace {

using json = nlohmann::json;

constexpr double kSymmetryTol = 1e-12;

// Doug's utilities for outcomes 0000 ... 1111.
constexpr std::array<double, kNumOutcomes> kDougColumn = {6, 8, 4, 4, 4, 4, 3, 3, 4, 4, 3, 3, 3, 3, 0, 1};

Outcome swap_bits(Outcome k, std::size_t a, std::size_t b) {
    const int shift_a = 3 - static_cast<int>(a);
    const int shift_b = 3 - static_cast<int>(b);
    const int bit_a = (k >> shift_a) & 1;
    const int bit_b = (k >> shift_b) & 1;
    if (bit_a == bit_b) return k;
    return static_cast<Outcome>(k ^ ((1 << shift_a) | (1 << shift_b)));
}

PayoffTable make_builtin() {
    std::array<PayoffVector, kNumOutcomes> rows{};
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        for (std::size_t i = 0; i < kNumPlayers; ++i) rows[k][i] = kDougColumn[swap_bits(k, i, 3)];
    }
    PayoffTable table = PayoffTable::from_outcomes(rows, /*require_symmetric=*/true);
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        for (Player p : kAllPlayers) {
            const Dish own = outcome_bit(k, p) ? Dish::Expensive : Dish::Cheap;
            const int others = expensive_count(k) - outcome_bit(k, p);
            if (table.utility(k, p) != symmetric_payoff(own, others)) {
                throw std::logic_error("built-in payoff table disagrees with its symmetric form");
            }
        }
    }
    return table;
}

double number_at(const json &node, const std::string &key) {
    if (!node.is_number()) throw ParseError("value under '" + key + "' is not a number");
    const double v = node.get<double>();
    if (!std::isfinite(v)) throw ParseError("value under '" + key + "' is not finite");
    return v;
}

std::array<double, 4> four_numbers(const json &node, const std::string &key) {
    if (!node.is_array() || node.size() != 4) throw ParseError("'" + key + "' must be an array of 4 numbers");
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = number_at(node[i], key);
    return out;
}

}  // namespace

const PayoffTable &PayoffTable::builtin() {
    static const PayoffTable table = make_builtin();
    return table;
}

PayoffTable PayoffTable::from_symmetric(const std::array<double, 4> &cheap, const std::array<double, 4> &expensive) {
    for (double v : cheap) {
        if (!std::isfinite(v)) throw ValidationError("non-finite utility in symmetric table");
    }
    for (double v : expensive) {
        if (!std::isfinite(v)) throw ValidationError("non-finite utility in symmetric table");
    }
    std::array<PayoffVector, kNumOutcomes> rows{};
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        for (Player p : kAllPlayers) {
            const int others = expensive_count(k) - outcome_bit(k, p);
            rows[k][index_of(p)] = outcome_bit(k, p) ? expensive[others] : cheap[others];
        }
    }
    return PayoffTable(rows);
}

PayoffTable PayoffTable::from_outcomes(const std::array<PayoffVector, kNumOutcomes> &rows, bool require_symmetric) {
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        if (!std::ranges::all_of(rows[k], [](double v) { return std::isfinite(v); })) {
            throw ValidationError("non-finite utility at outcome " + outcome_label(k));
        }
    }
    PayoffTable table(rows);
    if (require_symmetric) {
        if (auto bad = table.symmetry_violation(); !bad.empty()) {
            throw ValidationError("payoff table is not symmetric at outcome " + bad);
        }
    }
    return table;
}

std::string PayoffTable::symmetry_violation() const {
    std::array<std::array<std::optional<double>, 4>, 2> f{};
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        for (Player p : kAllPlayers) {
            const int own = outcome_bit(k, p);
            const int others = expensive_count(k) - own;
            const double v = utility(k, p);
            auto &slot = f[own][others];
            if (!slot) {
                slot = v;
            } else if (std::abs(*slot - v) > kSymmetryTol) {
                return outcome_label(k);
            }
        }
    }
    return {};
}

double PayoffTable::min_utility() const {
    double lo = rows_[0][0];
    for (const auto &row : rows_) lo = std::min(lo, *std::ranges::min_element(row));
    return lo;
}

double PayoffTable::max_utility() const {
    double hi = rows_[0][0];
    for (const auto &row : rows_) hi = std::max(hi, *std::ranges::max_element(row));
    return hi;
}

double symmetric_payoff(Dish own, int others_expensive) {
    if (others_expensive < 0 || others_expensive > 3) {
        throw DomainError("others_expensive=" + std::to_string(others_expensive) + " outside [0, 3]");
    }
    static constexpr std::array<double, 4> cheap = {6, 4, 3, 0};
    static constexpr std::array<double, 4> expensive = {8, 4, 3, 1};
    return own == Dish::Cheap ? cheap[others_expensive] : expensive[others_expensive];
}

PayoffVector expected_payoffs(const OutcomeDistribution &dist, const PayoffTable &table) {
    const auto &p = dist.probabilities();
    double total = 0.0;
    for (double v : p) total += v;
    if (std::abs(total - 1.0) > kAnalyticTol) throw ValidationError("distribution does not sum to 1");
    PayoffVector out{};
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        if (p[k] == 0.0) continue;
        for (std::size_t i = 0; i < kNumPlayers; ++i) out[i] += p[k] * table.at(k)[i];
    }
    return out;
}

PayoffTable load_table(std::string_view config_text) {
    json doc;
    try {
        doc = json::parse(config_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("payoff config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("payoff config must be a JSON object");
    for (const auto &[key, value] : doc.items()) {
        if (key != "outcomes" && key != "symmetric" && key != "require_symmetric") {
            throw ParseError("unexpected key '" + key + "'");
        }
    }
    const bool has_outcomes = doc.contains("outcomes");
    const bool has_symmetric = doc.contains("symmetric");
    if (has_outcomes == has_symmetric) throw ParseError("exactly one of 'outcomes' or 'symmetric' is required");

    if (has_symmetric) {
        if (doc.contains("require_symmetric")) throw ParseError("'require_symmetric' only applies to 'outcomes'");
        const json &sym = doc["symmetric"];
        if (!sym.is_object()) throw ParseError("'symmetric' must be an object");
        for (const auto &[key, value] : sym.items()) {
            if (key != "C" && key != "E") throw ParseError("unexpected key 'symmetric." + key + "'");
        }
        for (const char *key : {"C", "E"}) {
            if (!sym.contains(key)) throw ParseError(std::string("missing key 'symmetric.") + key + "'");
        }
        return PayoffTable::from_symmetric(four_numbers(sym["C"], "symmetric.C"),
                                           four_numbers(sym["E"], "symmetric.E"));
    }

    bool require_symmetric = false;
    if (doc.contains("require_symmetric")) {
        if (!doc["require_symmetric"].is_boolean()) throw ParseError("'require_symmetric' must be a boolean");
        require_symmetric = doc["require_symmetric"].get<bool>();
    }
    const json &outcomes = doc["outcomes"];
    if (!outcomes.is_object()) throw ParseError("'outcomes' must be an object");
    for (const auto &[key, value] : outcomes.items()) {
        try {
            (void)parse_outcome_label(key);
        } catch (const DomainError &) {
            throw ParseError("unexpected key 'outcomes." + key + "'");
        }
    }
    std::array<PayoffVector, kNumOutcomes> rows{};
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        const std::string label = outcome_label(k);
        if (!outcomes.contains(label)) throw ParseError("missing key 'outcomes." + label + "'");
        rows[k] = four_numbers(outcomes[label], "outcomes." + label);
    }
    return PayoffTable::from_outcomes(rows, require_symmetric);
}

std::string dump_table(const PayoffTable &table) {
    json outcomes = json::object();
    for (Outcome k = 0; k < kNumOutcomes; ++k) {
        const auto &row = table.at(k);
        outcomes[outcome_label(k)] = json::array({row[0], row[1], row[2], row[3]});
    }
    return json{{"outcomes", outcomes}}.dump(2) + "\n";
}

}  // namespace qdiner
