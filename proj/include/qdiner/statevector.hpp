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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qdiner {

using Complex = std::complex<double>;

/// Tolerance for analytic identities (normalization, unitarity).
inline constexpr double kAnalyticTol = 1e-9;
/// Tolerance for equalities that only involve a handful of float operations.
inline constexpr double kArithmeticTol = 1e-12;

inline constexpr std::size_t kMaxQubits = 20;

/**
 * Dense statevector over n qubits.
 *
 * Amplitude index k is read as a bit string with qubit 0 in the most
 * significant position, so for the four-player game index 0b0101 is the
 * outcome "0101" with Alice leftmost. Instances are always normalized.
 */
class StateVector {
   public:
    /// |index> on n qubits.
    static StateVector basis(std::size_t num_qubits, std::size_t index);

    /// Takes amplitudes that must already be normalized within kAnalyticTol.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    static StateVector normalized(std::vector<Complex> amps);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex &operator[](std::size_t k) const { return amps_.at(k); }

    double norm_squared() const noexcept;

   private:
    StateVector(std::size_t num_qubits, std::vector<Complex> amps);

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// 2x2 unitary, row-major: [[m00, m01], [m10, m11]].
struct SingleQubitUnitary {
    Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    static SingleQubitUnitary identity() { return {}; }
    static SingleQubitUnitary pauli_y() { return {0.0, {0.0, -1.0}, {0.0, 1.0}, 0.0}; }

    SingleQubitUnitary adjoint() const;
    SingleQubitUnitary operator*(const SingleQubitUnitary &rhs) const;
    SingleQubitUnitary operator*(Complex scalar) const;

    bool is_unitary(double tol = kAnalyticTol) const;
    double max_abs_diff(const SingleQubitUnitary &other) const;

    bool operator==(const SingleQubitUnitary &) const = default;
};

/// Dense 2^n x 2^n unitary. Every construction path checks unitarity.
class RegisterOperator {
   public:
    static RegisterOperator identity(std::size_t num_qubits);

    /// Row-major entries; rejected unless unitary within kAnalyticTol.
    static RegisterOperator from_entries(std::size_t num_qubits, std::vector<Complex> entries);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return dim_; }
    const Complex &at(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }
    std::span<const Complex> entries() const noexcept { return entries_; }

    RegisterOperator adjoint() const;
    RegisterOperator operator*(const RegisterOperator &rhs) const;

    bool is_unitary(double tol = kAnalyticTol) const;
    double max_abs_diff(const RegisterOperator &other) const;

   private:
    RegisterOperator(std::size_t num_qubits, std::vector<Complex> entries);

    std::size_t num_qubits_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

enum class ControlledKind { CZ, CNOT };

StateVector apply_single_qubit(const StateVector &state, const SingleQubitUnitary &u, std::size_t qubit);

StateVector apply_controlled(const StateVector &state, ControlledKind kind, std::size_t control, std::size_t target);

/// a (x) b (x) c (x) d, with a acting on qubit 0.
RegisterOperator tensor4(const SingleQubitUnitary &a, const SingleQubitUnitary &b, const SingleQubitUnitary &c,
                         const SingleQubitUnitary &d);

StateVector apply_operator(const StateVector &state, const RegisterOperator &op);

/// Born-rule probabilities |amp_k|^2, indexed like the amplitudes.
std::vector<double> probabilities(const StateVector &state);

/// True when a = e^{i chi} b for some chi, entrywise within tol.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);
bool equal_up_to_global_phase(const RegisterOperator &a, const RegisterOperator &b, double tol);

}  // namespace qdiner
