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

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "qdiner/errors.hpp"
#include "qdiner/ewl.hpp"

namespace qdiner {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

StrategyProfile named(const char *letters) { return to_strategy_profile(parse_named_profile(letters)); }

TEST(Ewl, EntangledStartState) {
    const auto s = apply_operator(StateVector::basis(4, 0), ewl::entangler());
    for (std::size_t k = 0; k < 16; ++k) {
        const Complex want = k == 0 ? Complex(1 / std::numbers::sqrt2) : k == 15 ? Complex(0, 1 / std::numbers::sqrt2)
                                                                                  : Complex(0.0);
        EXPECT_NEAR(std::abs(s[k] - want), 0.0, kTol) << k;
    }
}

TEST(Ewl, EntanglerMatchesKroneckerConstruction) {
    const auto ref = oracle::entangler_dense();
    const auto &j = ewl::entangler();
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) ASSERT_NEAR(std::abs(j.at(r, c) - ref(r, c)), 0.0, kTol);
    EXPECT_NEAR(std::abs(j.at(0, 0) - Complex(1 / std::numbers::sqrt2)), 0.0, kTol);
    EXPECT_TRUE(j.is_unitary(kTol));
    EXPECT_LT((ewl::disentangler() * j).max_abs_diff(RegisterOperator::identity(4)), kTol);
}

TEST(Ewl, NamedStrategyMatrices) {
    const auto c = ewl::strategy_unitary(Strategy::named(Move::C));
    const auto e = ewl::strategy_unitary(Strategy::named(Move::E));
    const auto a = ewl::strategy_unitary(Strategy::named(Move::A));
    EXPECT_EQ(c, (SingleQubitUnitary{1.0, 0.0, 0.0, 1.0}));
    EXPECT_EQ(e, (SingleQubitUnitary{0.0, 1.0, -1.0, 0.0}));
    EXPECT_EQ(a, (SingleQubitUnitary{Complex(0, 1), 0.0, 0.0, Complex(0, -1)}));
}

TEST(Ewl, ParametricAgreesWithNamedAtCorners) {
    const std::pair<Move, std::pair<double, double>> corners[] = {
        {Move::C, {0.0, 0.0}}, {Move::E, {kPi, 0.0}}, {Move::A, {0.0, kPi / 2}}};
    for (const auto &[m, angles] : corners) {
        const auto p = ewl::strategy_unitary(Strategy::parametric(angles.first, angles.second));
        EXPECT_LT(p.max_abs_diff(ewl::strategy_unitary(Strategy::named(m))), kTol) << move_letter(m);
    }
}

TEST(Ewl, ParametricMatchesOracleMatrix) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const double t = rng.theta(), p = rng.phi();
        const auto u = ewl::strategy_unitary(Strategy::parametric(t, p));
        const auto ref = oracle::strategy(t, p);
        EXPECT_LT(u.max_abs_diff({ref(0, 0), ref(0, 1), ref(1, 0), ref(1, 1)}), kTol);
    }
}

TEST(Ewl, ParametricOutsideDomainThrows) {
    EXPECT_THROW(Strategy::parametric(-0.1, 0.0), DomainError);
    EXPECT_THROW(Strategy::parametric(kPi + 1e-6, 0.0), DomainError);
    EXPECT_THROW(Strategy::parametric(0.0, kPi / 2 + 1e-6), DomainError);
    EXPECT_THROW(Strategy::parametric(std::nan(""), 0.0), DomainError);
    EXPECT_NO_THROW(Strategy::parametric(kPi, kPi / 2));
}

TEST(Ewl, ExampleOutcomes) {
    EXPECT_NEAR(ewl::outcome_distribution(named("CCCC"))[0b0000], 1.0, 1e-9);
    EXPECT_NEAR(ewl::outcome_distribution(named("EEEE"))[0b1111], 1.0, 1e-9);
    EXPECT_NEAR(ewl::outcome_distribution(named("EEEA"))[0b0001], 1.0, 1e-9);
    EXPECT_NEAR(ewl::outcome_distribution(named("AAAA"))[0b0000], 1.0, 1e-9);
}

// Every {C, E}^4 profile lands on its classical outcome.
TEST(Ewl, ClassicalReduction) {
    for (Outcome k = 0; k < 16; ++k) {
        NamedProfile p{};
        for (Player pl : kAllPlayers) p[index_of(pl)] = outcome_bit(k, pl) ? Move::E : Move::C;
        const auto d = ewl::outcome_distribution(to_strategy_profile(p));
        EXPECT_NEAR(d[k], 1.0, 1e-9) << outcome_label(k);
    }
}

TEST(Ewl, AllNamedProfilesMatchBranchPhaseOracle) {
    for (Move a : kQuantumMoves)
        for (Move b : kQuantumMoves)
            for (Move c : kQuantumMoves)
                for (Move d : kQuantumMoves) {
                    const NamedProfile np = {a, b, c, d};
                    const std::string letters = profile_letters(np);
                    const auto ref = oracle::branch_phase_distribution(letters.c_str());
                    const auto got = ewl::outcome_distribution(to_strategy_profile(np));
                    for (Outcome k = 0; k < 16; ++k) ASSERT_NEAR(got[k], ref[k], kTol) << letters;
                }
}

TEST(EwlProperty, RandomProfilesMatchBranchPhaseOracle) {
    gen::Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto profile = rng.profile();
        std::array<oracle::Dense, 4> moves;
        for (std::size_t q = 0; q < 4; ++q) moves[q] = oracle::strategy(profile[q].theta(), profile[q].phi());
        const auto ref = oracle::branch_phase_final_state(moves);
        const auto got = ewl::final_state(profile);
        for (std::size_t k = 0; k < 16; ++k) ASSERT_NEAR(std::abs(got[k] - ref[k]), 0.0, kTol);
    }
}

TEST(EwlProperty, RandomProfilesStayNormalized) {
    gen::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = ewl::outcome_distribution(rng.profile());
        double sum = 0.0;
        for (double p : d.probabilities()) {
            ASSERT_GE(p, 0.0);
            sum += p;
        }
        ASSERT_NEAR(sum, 1.0, kTol);
    }
}

// Relabelling players permutes the outcome bits the same way.
TEST(EwlProperty, PermutationEquivariance) {
    gen::Rng rng(23);
    const auto perms = gen::permutations4();
    for (int trial = 0; trial < 20; ++trial) {
        const auto profile = rng.profile();
        const auto base = ewl::outcome_distribution(profile);
        for (const auto &perm : perms) {
            StrategyProfile moved = profile;
            for (std::size_t i = 0; i < 4; ++i) moved[perm[i]] = profile[i];
            const auto d = ewl::outcome_distribution(moved);
            for (Outcome k = 0; k < 16; ++k) ASSERT_NEAR(d[gen::permute_outcome(k, perm)], base[k], kTol);
        }
    }
}

TEST(EwlProperty, ContinuityNearNamedPoints) {
    const double eps = 1e-7;
    const std::pair<Move, std::pair<double, double>> corners[] = {
        {Move::C, {eps, eps}}, {Move::E, {kPi - eps, eps}}, {Move::A, {eps, kPi / 2 - eps}}};
    for (const auto &[m, angles] : corners) {
        StrategyProfile near = named("CEAC");
        StrategyProfile exact = near;
        near[3] = Strategy::parametric(angles.first, angles.second);
        exact[3] = Strategy::named(m);
        EXPECT_LT(ewl::outcome_distribution(near).total_variation(ewl::outcome_distribution(exact)), 1e-6);
    }
}

}  // namespace
}  // namespace qdiner
