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
#include "qdiner/statevector.hpp"

namespace qdiner {
namespace {

constexpr double kTol = 1e-12;

const SingleQubitUnitary kX{0.0, 1.0, 1.0, 0.0};
const SingleQubitUnitary kH{1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2,
                            -1 / std::numbers::sqrt2};

double max_diff(const StateVector &s, const std::vector<Complex> &ref) {
    double d = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) d = std::max(d, std::abs(s[k] - ref[k]));
    return d;
}

std::vector<Complex> to_vec(const StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

TEST(StateVector, BasisIsUnitVector) {
    const auto s = StateVector::basis(4, 5);
    EXPECT_EQ(s.num_qubits(), 4u);
    EXPECT_EQ(s.dimension(), 16u);
    for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(s[k], Complex(k == 5 ? 1.0 : 0.0));
}

TEST(StateVector, BasisRejectsBadArguments) {
    EXPECT_THROW(StateVector::basis(4, 16), DomainError);
    EXPECT_THROW(StateVector::basis(0, 0), DomainError);
    EXPECT_THROW(StateVector::basis(kMaxQubits + 1, 0), DomainError);
}

TEST(StateVector, FromAmplitudesValidates) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), ValidationError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ValidationError);
    EXPECT_NO_THROW(StateVector::from_amplitudes({1 / std::numbers::sqrt2, Complex{0, 1 / std::numbers::sqrt2}}));
}

TEST(StateVector, NormalizedRescales) {
    const auto s = StateVector::normalized({3.0, 4.0});
    EXPECT_NEAR(s[0].real(), 0.6, kTol);
    EXPECT_NEAR(s[1].real(), 0.8, kTol);
    EXPECT_THROW(StateVector::normalized({0.0, 0.0}), ValidationError);
}

TEST(StateVector, XOnQubitZeroFlipsMostSignificantBit) {
    const auto s = apply_single_qubit(StateVector::basis(4, 0), kX, 0);
    EXPECT_EQ(s[0b1000], Complex(1.0));
    const auto t = apply_single_qubit(StateVector::basis(4, 0), kX, 3);
    EXPECT_EQ(t[0b0001], Complex(1.0));
}

TEST(StateVector, ApplySingleQubitRejectsNonUnitaryAndBadIndex) {
    const SingleQubitUnitary bad{1.0, 1.0, 0.0, 1.0};
    EXPECT_THROW(apply_single_qubit(StateVector::basis(2, 0), bad, 0), ValidationError);
    EXPECT_THROW(apply_single_qubit(StateVector::basis(2, 0), kX, 2), DomainError);
}

TEST(StateVector, ControlledGatesOnBasisStates) {
    // CNOT 0 -> 1 on |10> gives |11>.
    auto s = apply_controlled(StateVector::basis(2, 0b10), ControlledKind::CNOT, 0, 1);
    EXPECT_EQ(s[0b11], Complex(1.0));
    // CZ only phases |11>.
    s = apply_controlled(StateVector::basis(2, 0b11), ControlledKind::CZ, 0, 1);
    EXPECT_EQ(s[0b11], Complex(-1.0));
    s = apply_controlled(StateVector::basis(2, 0b01), ControlledKind::CZ, 0, 1);
    EXPECT_EQ(s[0b01], Complex(1.0));
}

TEST(StateVector, ControlledRejectsEqualOrOutOfRangeOperands) {
    const auto s = StateVector::basis(3, 0);
    EXPECT_THROW(apply_controlled(s, ControlledKind::CZ, 1, 1), DomainError);
    EXPECT_THROW(apply_controlled(s, ControlledKind::CNOT, 0, 3), DomainError);
}

TEST(StateVector, BellStateFromHadamardAndCnot) {
    auto s = apply_single_qubit(StateVector::basis(2, 0), kH, 0);
    s = apply_controlled(s, ControlledKind::CNOT, 0, 1);
    const auto p = probabilities(s);
    EXPECT_NEAR(p[0], 0.5, kTol);
    EXPECT_NEAR(p[3], 0.5, kTol);
    EXPECT_NEAR(p[1] + p[2], 0.0, kTol);
}

TEST(StateVector, Tensor4MatchesNaiveKronecker) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = rng.unitary(), b = rng.unitary(), c = rng.unitary(), d = rng.unitary();
        const auto op = tensor4(a, b, c, d);
        const auto ref = oracle::kron(oracle::kron(oracle::kron(gen::to_dense(a), gen::to_dense(b)), gen::to_dense(c)),
                                      gen::to_dense(d));
        for (std::size_t r = 0; r < 16; ++r)
            for (std::size_t col = 0; col < 16; ++col) EXPECT_NEAR(std::abs(op.at(r, col) - ref(r, col)), 0.0, kTol);
    }
}

TEST(StateVector, Tensor4RejectsNonUnitary) {
    const SingleQubitUnitary bad{2.0, 0.0, 0.0, 1.0};
    const auto id = SingleQubitUnitary::identity();
    EXPECT_THROW(tensor4(id, bad, id, id), ValidationError);
}

TEST(StateVector, ApplyOperatorRejectsDimensionMismatch) {
    EXPECT_THROW(apply_operator(StateVector::basis(3, 0), RegisterOperator::identity(4)), DomainError);
}

TEST(StateVector, RegisterOperatorFromEntriesValidatesUnitarity) {
    EXPECT_THROW(RegisterOperator::from_entries(1, {1.0, 1.0, 0.0, 1.0}), ValidationError);
    EXPECT_THROW(RegisterOperator::from_entries(1, {1.0, 0.0, 1.0}), ValidationError);
}

// 200 random (state, unitary, qubit) triples against the dense
// I (x) ... (x) U (x) ... (x) I product.
TEST(StateVectorProperty, SingleQubitMatchesKroneckerOracle) {
    gen::Rng rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(5);
        const auto state = StateVector::normalized(rng.amplitudes(std::size_t{1} << n));
        const auto u = rng.unitary();
        const std::size_t q = rng.index(n);
        const auto got = apply_single_qubit(state, u, q);
        const auto ref = oracle::matvec(oracle::embed(gen::to_dense(u), q, n), to_vec(state));
        ASSERT_LT(max_diff(got, ref), kTol) << "trial " << trial << " n=" << n << " q=" << q;
    }
}

TEST(StateVectorProperty, NormPreservedByGates) {
    gen::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.index(4);
        auto s = StateVector::normalized(rng.amplitudes(std::size_t{1} << n));
        s = apply_single_qubit(s, rng.unitary(), rng.index(n));
        const std::size_t a = rng.index(n);
        const std::size_t b = (a + 1 + rng.index(n - 1)) % n;
        s = apply_controlled(s, trial % 2 ? ControlledKind::CZ : ControlledKind::CNOT, a, b);
        ASSERT_NEAR(s.norm_squared(), 1.0, kTol);
    }
}

TEST(StateVectorProperty, UnitaryThenAdjointIsIdentity) {
    gen::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.index(5);
        const auto s = StateVector::normalized(rng.amplitudes(std::size_t{1} << n));
        const auto u = rng.unitary();
        const std::size_t q = rng.index(n);
        const auto back = apply_single_qubit(apply_single_qubit(s, u, q), u.adjoint(), q);
        ASSERT_LT(max_diff(back, to_vec(s)), kTol);
    }
}

TEST(StateVectorProperty, ControlledGatesAreInvolutions) {
    gen::Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.index(4);
        const auto s = StateVector::normalized(rng.amplitudes(std::size_t{1} << n));
        const std::size_t a = rng.index(n);
        const std::size_t b = (a + 1 + rng.index(n - 1)) % n;
        for (auto kind : {ControlledKind::CZ, ControlledKind::CNOT}) {
            const auto twice = apply_controlled(apply_controlled(s, kind, a, b), kind, a, b);
            ASSERT_LT(max_diff(twice, to_vec(s)), kTol);
        }
    }
}

TEST(StateVectorProperty, ControlledMatchesDenseProjectorForm) {
    gen::Rng rng(10);
    const oracle::Dense p0 = oracle::mat2(1.0, 0.0, 0.0, 0.0), p1 = oracle::mat2(0.0, 0.0, 0.0, 1.0);
    const oracle::Dense x = oracle::mat2(0.0, 1.0, 1.0, 0.0), z = oracle::mat2(1.0, 0.0, 0.0, -1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.index(3);
        const auto s = StateVector::normalized(rng.amplitudes(std::size_t{1} << n));
        const std::size_t a = rng.index(n);
        const std::size_t b = (a + 1 + rng.index(n - 1)) % n;
        for (auto kind : {ControlledKind::CZ, ControlledKind::CNOT}) {
            const oracle::Dense &t = kind == ControlledKind::CZ ? z : x;
            const auto lo = oracle::embed(p0, a, n);
            const auto hi = oracle::matmul(oracle::embed(p1, a, n), oracle::embed(t, b, n));
            oracle::Dense m(lo.dim);
            for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = lo.a[i] + hi.a[i];
            const auto ref = oracle::matvec(m, to_vec(s));
            ASSERT_LT(max_diff(apply_controlled(s, kind, a, b), ref), kTol);
        }
    }
}

TEST(StateVector, GlobalPhaseComparison) {
    gen::Rng rng(12);
    const auto s = StateVector::normalized(rng.amplitudes(8));
    std::vector<Complex> rotated = to_vec(s);
    for (auto &a : rotated) a *= std::polar(1.0, 0.7);
    EXPECT_TRUE(equal_up_to_global_phase(s, StateVector::from_amplitudes(rotated), 1e-9));
    EXPECT_FALSE(equal_up_to_global_phase(StateVector::basis(3, 0), StateVector::basis(3, 1), 1e-9));
}

}  // namespace
}  // namespace qdiner
