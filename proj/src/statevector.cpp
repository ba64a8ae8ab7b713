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

#include "qdiner/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qdiner/errors.hpp"

namespace qdiner {

namespace {

bool is_finite(const Complex &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_qubit(std::size_t qubit, std::size_t num_qubits) {
    if (qubit >= num_qubits) {
        throw DomainError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits) +
                          "-qubit register");
    }
}

std::size_t qubit_count_for(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if (dim == 0 || (std::size_t{1} << n) != dim || n == 0 || n > kMaxQubits) {
        throw ValidationError("dimension " + std::to_string(dim) + " is not 2^n for 1 <= n <= 20");
    }
    return n;
}

// Bit mask for qubit q in an n-qubit index (qubit 0 is the most significant bit).
std::size_t mask_of(std::size_t qubit, std::size_t num_qubits) { return std::size_t{1} << (num_qubits - 1 - qubit); }

template <typename Range>
bool equal_up_to_phase(const Range &a, const Range &b, double tol) {
    if (a.size() != b.size()) return false;
    std::size_t pivot = 0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        if (std::abs(b[k]) > std::abs(b[pivot])) pivot = k;
    }
    if (std::abs(b[pivot]) <= tol) {
        return std::ranges::all_of(a, [tol](const Complex &z) { return std::abs(z) <= tol; });
    }
    Complex phase = a[pivot] / b[pivot];
    if (std::abs(std::abs(phase) - 1.0) > tol / std::abs(b[pivot])) return false;
    phase /= std::abs(phase);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k] - phase * b[k]) > tol) return false;
    }
    return true;
}

}  // namespace

// --- StateVector ---

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DomainError("qubit count " + std::to_string(num_qubits) + " outside [1, 20]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw DomainError("basis index " + std::to_string(index) + " out of range for dimension " +
                          std::to_string(dim));
    }
    std::vector<Complex> amps(dim, Complex{0.0});
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const std::size_t n = qubit_count_for(amps.size());
    if (!std::ranges::all_of(amps, is_finite)) throw ValidationError("non-finite amplitude");
    StateVector state(n, std::move(amps));
    if (std::abs(state.norm_squared() - 1.0) > kAnalyticTol) {
        throw ValidationError("state is not normalized (norm^2 = " + std::to_string(state.norm_squared()) + ")");
    }
    return state;
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
    const std::size_t n = qubit_count_for(amps.size());
    if (!std::ranges::all_of(amps, is_finite)) throw ValidationError("non-finite amplitude");
    double total = 0.0;
    for (const auto &z : amps) total += std::norm(z);
    if (total == 0.0) throw ValidationError("cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(total);
    for (auto &z : amps) z *= scale;
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &z : amps_) total += std::norm(z);
    return total;
}

// --- SingleQubitUnitary ---

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

SingleQubitUnitary SingleQubitUnitary::operator*(const SingleQubitUnitary &rhs) const {
    return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11, m10 * rhs.m00 + m11 * rhs.m10,
            m10 * rhs.m01 + m11 * rhs.m11};
}

SingleQubitUnitary SingleQubitUnitary::operator*(Complex scalar) const {
    return {m00 * scalar, m01 * scalar, m10 * scalar, m11 * scalar};
}

bool SingleQubitUnitary::is_unitary(double tol) const {
    if (!is_finite(m00) || !is_finite(m01) || !is_finite(m10) || !is_finite(m11)) return false;
    return (*this * adjoint()).max_abs_diff(identity()) <= tol;
}

double SingleQubitUnitary::max_abs_diff(const SingleQubitUnitary &other) const {
    return std::max({std::abs(m00 - other.m00), std::abs(m01 - other.m01), std::abs(m10 - other.m10),
                     std::abs(m11 - other.m11)});
}

// --- RegisterOperator ---

RegisterOperator::RegisterOperator(std::size_t num_qubits, std::vector<Complex> entries)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits), entries_(std::move(entries)) {}

RegisterOperator RegisterOperator::identity(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DomainError("qubit count " + std::to_string(num_qubits) + " outside [1, 20]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Complex> entries(dim * dim, Complex{0.0});
    for (std::size_t k = 0; k < dim; ++k) entries[k * dim + k] = 1.0;
    return RegisterOperator(num_qubits, std::move(entries));
}

RegisterOperator RegisterOperator::from_entries(std::size_t num_qubits, std::vector<Complex> entries) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DomainError("qubit count " + std::to_string(num_qubits) + " outside [1, 20]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (entries.size() != dim * dim) {
        throw ValidationError("expected " + std::to_string(dim * dim) + " entries, got " +
                              std::to_string(entries.size()));
    }
    RegisterOperator op(num_qubits, std::move(entries));
    if (!op.is_unitary()) throw ValidationError("operator is not unitary");
    return op;
}

RegisterOperator RegisterOperator::adjoint() const {
    std::vector<Complex> out(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
    }
    return RegisterOperator(num_qubits_, std::move(out));
}

RegisterOperator RegisterOperator::operator*(const RegisterOperator &rhs) const {
    if (rhs.dim_ != dim_) throw DomainError("operator dimension mismatch");
    std::vector<Complex> out(entries_.size(), Complex{0.0});
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex lhs = entries_[r * dim_ + k];
            if (lhs == Complex{0.0}) continue;
            for (std::size_t c = 0; c < dim_; ++c) out[r * dim_ + c] += lhs * rhs.entries_[k * dim_ + c];
        }
    }
    return RegisterOperator(num_qubits_, std::move(out));
}

bool RegisterOperator::is_unitary(double tol) const {
    if (!std::ranges::all_of(entries_, is_finite)) return false;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            Complex dot{0.0};
            for (std::size_t k = 0; k < dim_; ++k) dot += entries_[r * dim_ + k] * std::conj(entries_[c * dim_ + k]);
            if (std::abs(dot - (r == c ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

double RegisterOperator::max_abs_diff(const RegisterOperator &other) const {
    if (other.dim_ != dim_) throw DomainError("operator dimension mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    return worst;
}

// --- free operations ---

StateVector apply_single_qubit(const StateVector &state, const SingleQubitUnitary &u, std::size_t qubit) {
    check_qubit(qubit, state.num_qubits());
    if (!u.is_unitary()) throw ValidationError("single-qubit gate is not unitary");
    const std::size_t mask = mask_of(qubit, state.num_qubits());
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k & mask) continue;
        const Complex a0 = out[k];
        const Complex a1 = out[k | mask];
        out[k] = u.m00 * a0 + u.m01 * a1;
        out[k | mask] = u.m10 * a0 + u.m11 * a1;
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_controlled(const StateVector &state, ControlledKind kind, std::size_t control, std::size_t target) {
    check_qubit(control, state.num_qubits());
    check_qubit(target, state.num_qubits());
    if (control == target) throw DomainError("control and target must differ (both " + std::to_string(control) + ")");
    const std::size_t cmask = mask_of(control, state.num_qubits());
    const std::size_t tmask = mask_of(target, state.num_qubits());
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!(k & cmask)) continue;
        if (kind == ControlledKind::CZ) {
            if (k & tmask) out[k] = -out[k];
        } else if (!(k & tmask)) {
            std::swap(out[k], out[k | tmask]);
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

RegisterOperator tensor4(const SingleQubitUnitary &a, const SingleQubitUnitary &b, const SingleQubitUnitary &c,
                         const SingleQubitUnitary &d) {
    const SingleQubitUnitary *factors[4] = {&a, &b, &c, &d};
    for (std::size_t q = 0; q < 4; ++q) {
        if (!factors[q]->is_unitary()) throw ValidationError("factor " + std::to_string(q) + " is not unitary");
    }
    auto entry = [](const SingleQubitUnitary &u, std::size_t r, std::size_t c) {
        return r == 0 ? (c == 0 ? u.m00 : u.m01) : (c == 0 ? u.m10 : u.m11);
    };
    constexpr std::size_t dim = 16;
    std::vector<Complex> entries(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex value{1.0};
            for (std::size_t q = 0; q < 4; ++q) {
                const std::size_t shift = 3 - q;
                value *= entry(*factors[q], (r >> shift) & 1, (c >> shift) & 1);
            }
            entries[r * dim + c] = value;
        }
    }
    return RegisterOperator::from_entries(4, std::move(entries));
}

StateVector apply_operator(const StateVector &state, const RegisterOperator &op) {
    if (op.dimension() != state.dimension()) {
        throw DomainError("operator dimension " + std::to_string(op.dimension()) + " does not match state dimension " +
                          std::to_string(state.dimension()));
    }
    const std::size_t dim = state.dimension();
    const auto in = state.amplitudes();
    std::vector<Complex> out(dim, Complex{0.0});
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc{0.0};
        for (std::size_t c = 0; c < dim; ++c) acc += op.at(r, c) * in[c];
        out[r] = acc;
    }
    return StateVector::from_amplitudes(std::move(out));
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.dimension());
    for (const auto &z : state.amplitudes()) p.push_back(std::norm(z));
    return p;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    return equal_up_to_phase(a.amplitudes(), b.amplitudes(), tol);
}

bool equal_up_to_global_phase(const RegisterOperator &a, const RegisterOperator &b, double tol) {
    return equal_up_to_phase(a.entries(), b.entries(), tol);
}

}  // namespace qdiner
