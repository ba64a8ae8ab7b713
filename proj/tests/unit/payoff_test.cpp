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

#include <gtest/gtest.h>

#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "qdiner/errors.hpp"
#include "qdiner/payoff.hpp"

namespace qdiner {
namespace {

const PayoffTable &table() { return PayoffTable::builtin(); }

std::string full_outcomes_json(const PayoffTable &t, const std::string &skip = "") {
    std::string out = "{\"outcomes\":{";
    bool first = true;
    for (Outcome k = 0; k < 16; ++k) {
        if (outcome_label(k) == skip) continue;
        if (!first) out += ",";
        first = false;
        const auto &r = t.at(k);
        out += "\"" + outcome_label(k) + "\":[" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
               std::to_string(r[2]) + "," + std::to_string(r[3]) + "]";
    }
    return out + "}}";
}

TEST(Payoff, DougColumnLiteral) {
    const double doug[16] = {6, 8, 4, 4, 4, 4, 3, 3, 4, 4, 3, 3, 3, 3, 0, 1};
    for (Outcome k = 0; k < 16; ++k) EXPECT_EQ(table().utility(k, Player::Doug), doug[k]) << outcome_label(k);
}

TEST(Payoff, NamedRows) {
    EXPECT_EQ(table().at(0b0000), (PayoffVector{6, 6, 6, 6}));
    EXPECT_EQ(table().at(0b1111), (PayoffVector{1, 1, 1, 1}));
    EXPECT_EQ(table().at(0b0001), (PayoffVector{4, 4, 4, 8}));
    EXPECT_EQ(table().at(0b0101), (PayoffVector{3, 4, 3, 4}));
    EXPECT_EQ(table().at(0b1101), (PayoffVector{3, 3, 0, 3}));
}

TEST(Payoff, SymmetricFormula) {
    EXPECT_EQ(symmetric_payoff(Dish::Cheap, 0), 6);
    EXPECT_EQ(symmetric_payoff(Dish::Expensive, 0), 8);
    EXPECT_EQ(symmetric_payoff(Dish::Cheap, 3), 0);
    EXPECT_EQ(symmetric_payoff(Dish::Expensive, 3), 1);
    EXPECT_THROW(symmetric_payoff(Dish::Cheap, 4), DomainError);
    EXPECT_THROW(symmetric_payoff(Dish::Expensive, -1), DomainError);
}

TEST(Payoff, BuiltinEqualsSymmetricConstruction) {
    EXPECT_EQ(PayoffTable::from_symmetric({6, 4, 3, 0}, {8, 4, 3, 1}), table());
    EXPECT_TRUE(table().is_symmetric());
}

TEST(Payoff, Bounds) {
    EXPECT_EQ(table().min_utility(), 0);
    EXPECT_EQ(table().max_utility(), 8);
}

TEST(Payoff, ExpectedPayoffOfPointMass) {
    const auto v = expected_payoffs(OutcomeDistribution::point_mass(0b0101), table());
    EXPECT_EQ(v, (PayoffVector{3, 4, 3, 4}));
}

TEST(PayoffProperty, ExpectedPayoffMatchesLiteralSum) {
    gen::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 16> p{};
        double s = 0.0;
        for (auto &x : p) s += (x = rng.uniform(0.0, 1.0));
        for (auto &x : p) x /= s;
        const auto v = expected_payoffs(OutcomeDistribution::from_probabilities(p), table());
        for (std::size_t i = 0; i < 4; ++i) {
            ASSERT_NEAR(v[i], oracle::player_payoff_literal(p, i), 1e-12);
            ASSERT_GE(v[i], 0.0 - 1e-12);
            ASSERT_LE(v[i], 8.0 + 1e-12);
        }
    }
}

// u_{pi(i)}(pi(s)) = u_i(s) for every outcome and relabelling.
TEST(PayoffProperty, PermutationSymmetry) {
    for (const auto &perm : gen::permutations4()) {
        for (Outcome k = 0; k < 16; ++k) {
            const Outcome moved = gen::permute_outcome(k, perm);
            for (std::size_t i = 0; i < 4; ++i) ASSERT_EQ(table().at(moved)[perm[i]], table().at(k)[i]);
        }
    }
}

TEST(Payoff, ExpectedPayoffRejectsUnnormalized) {
    std::array<double, 16> p{};
    p[0] = 0.5;
    EXPECT_THROW(OutcomeDistribution::from_probabilities(p), ValidationError);
}

TEST(PayoffConfig, SymmetricFormEqualsBuiltin) {
    const auto t = load_table(R"({"symmetric":{"C":[6,4,3,0],"E":[8,4,3,1]}})");
    EXPECT_EQ(t, table());
}

TEST(PayoffConfig, DumpRoundTrips) {
    EXPECT_EQ(load_table(dump_table(table())), table());
    const auto odd = PayoffTable::from_symmetric({1.5, 2.25, -3, 0.125}, {9, 7, 5, 3});
    EXPECT_EQ(load_table(dump_table(odd)), odd);
}

TEST(PayoffConfig, MissingOutcomeNamesKey) {
    try {
        load_table(full_outcomes_json(table(), "0111"));
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("0111"), std::string::npos) << e.what();
    }
}

TEST(PayoffConfig, AsymmetricTableHonoursRequireSymmetric) {
    auto rows = table().rows();
    rows[0b0011][0] = 5;
    const auto asym = PayoffTable::from_outcomes(rows);
    const std::string text = dump_table(asym);
    EXPECT_NO_THROW(load_table(text));
    std::string strict = text;
    strict.insert(strict.find('{') + 1, "\"require_symmetric\": true,");
    EXPECT_THROW(load_table(strict), ValidationError);
    EXPECT_EQ(asym.symmetry_violation().empty(), false);
}

TEST(PayoffConfig, RejectsMalformedInput) {
    EXPECT_THROW(load_table("not json"), ParseError);
    EXPECT_THROW(load_table("[]"), ParseError);
    EXPECT_THROW(load_table(R"({"symmetric":{"C":[6,4,3],"E":[8,4,3,1]}})"), ParseError);
    EXPECT_THROW(load_table(R"({"symmetric":{"C":[6,4,3,"x"],"E":[8,4,3,1]}})"), ParseError);
    EXPECT_THROW(load_table(R"({"symmetric":{"C":[6,4,3,0],"E":[8,4,3,1]},"extra":1})"), ParseError);
    EXPECT_THROW(load_table(R"({})"), ParseError);
}

}  // namespace
}  // namespace qdiner
