// Copyright 2026 The qngmetric Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Ansatz circuits U(theta) = U_P(theta_P) ... U_1(theta_1) acting on a fixed
 * basis input state, and their preparation.
 *
 * Indices in the C++ API are zero-based: gate k (0 <= k < P) owns
 * parameter k.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qng/gates.hpp"
#include "qng/statevector.hpp"

namespace qng {

class AnsatzCircuit {
  public:
    AnsatzCircuit(std::size_t num_qubits, std::vector<ParameterizedGate> gates,
                  std::uint64_t input_index = 0);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_parameters() const noexcept {
        return gates_.size();
    }
    [[nodiscard]] const std::vector<ParameterizedGate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const ParameterizedGate &gate(std::size_t k) const {
        return gates_.at(k);
    }
    [[nodiscard]] std::uint64_t input_index() const noexcept {
        return input_index_;
    }

    /// Fresh |in>. Not counted as a clone.
    [[nodiscard]] Statevector make_input_state() const {
        return make_basis_state(num_qubits_, input_index_);
    }

  private:
    std::size_t num_qubits_;
    std::vector<ParameterizedGate> gates_;
    std::uint64_t input_index_;
};

class ParameterVector {
  public:
    ParameterVector() = default;
    explicit ParameterVector(std::vector<double> values)
        : values_(std::move(values)) {}
    ParameterVector(std::initializer_list<double> values) : values_(values) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t k) const { return values_[k]; }
    [[nodiscard]] double &operator[](std::size_t k) { return values_[k]; }
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }
    [[nodiscard]] const std::vector<double> &vector() const noexcept {
        return values_;
    }

  private:
    std::vector<double> values_;
};

/// Throws DomainError unless params.size() == circuit.num_parameters().
void require_matching_parameters(const AnsatzCircuit &circuit,
                                 const ParameterVector &params);

/**
 * @brief Operators of a circuit evaluated at fixed parameters.
 *
 * Each gate's unitary, adjoint, derivative and derivative adjoint are built
 * once so the algorithms only pay for applications.
 */
class BoundAnsatz {
  public:
    BoundAnsatz(const AnsatzCircuit &circuit, const ParameterVector &params);

    [[nodiscard]] std::size_t size() const noexcept { return unitary_.size(); }
    [[nodiscard]] const GateOperator &unitary(std::size_t k) const {
        return unitary_[k];
    }
    [[nodiscard]] const GateOperator &unitary_adjoint(std::size_t k) const {
        return unitary_adj_[k];
    }
    [[nodiscard]] const GateOperator &derivative(std::size_t k) const {
        return derivative_[k];
    }
    [[nodiscard]] const GateOperator &derivative_adjoint(std::size_t k) const {
        return derivative_adj_[k];
    }

  private:
    std::vector<GateOperator> unitary_;
    std::vector<GateOperator> unitary_adj_;
    std::vector<GateOperator> derivative_;
    std::vector<GateOperator> derivative_adj_;
};

/// |psi> = U_P ... U_1 |in>, P gate applications.
[[nodiscard]] Statevector prepare_ansatz_state(const AnsatzCircuit &circuit,
                                               const ParameterVector &params,
                                               OpCounter &counter);

/// |psi>_upto = U_upto ... U_1 |in>; upto = 0 gives |in>.
[[nodiscard]] Statevector prepare_partial_state(const AnsatzCircuit &circuit,
                                                const ParameterVector &params,
                                                std::size_t upto,
                                                OpCounter &counter);

/**
 * @brief Seeded test ansatz on |0...0>.
 *
 * Repeats layers of: one single-qubit rotation per qubit with its axis drawn
 * uniformly from {X, Y, Z}, then controlled-Z rotations on the ring
 * (q -> q+1 mod N, skipped for N = 1). Truncated after `num_parameters`
 * gates.
 */
[[nodiscard]] AnsatzCircuit random_ansatz(std::size_t num_qubits,
                                          std::size_t num_parameters,
                                          std::uint64_t seed);

/// `layers` full layers of random_ansatz.
[[nodiscard]] AnsatzCircuit random_layered_ansatz(std::size_t num_qubits,
                                                  std::size_t layers,
                                                  std::uint64_t seed);

/// Uniform parameters in [0, 2 pi).
/**
 * @brief Seeded circuit of PauliRotation gates only, with axes of weight one
 * or two drawn uniformly. Weight-two axes entangle, so the circuit has no
 * controlled gates and every gate has a phased counterpart.
 */
[[nodiscard]] AnsatzCircuit random_pauli_rotation_ansatz(std::size_t num_qubits,
                                                         std::size_t num_parameters,
                                                         std::uint64_t seed);

/// Replaces every PauliRotation by the PhasedPauliRotation with `phase_rate`.
/// Throws DomainError for any other gate kind.
[[nodiscard]] AnsatzCircuit with_phase(const AnsatzCircuit &circuit,
                                       double phase_rate);

[[nodiscard]] ParameterVector random_parameters(std::size_t count,
                                                std::uint64_t seed);

} // namespace qng
