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
#include "qng/ansatz.hpp"

#include <array>
#include <numbers>
#include <string>
#include <variant>

#include "qng/error.hpp"
#include "qng/random.hpp"

namespace qng {

AnsatzCircuit::AnsatzCircuit(std::size_t num_qubits,
                             std::vector<ParameterizedGate> gates,
                             std::uint64_t input_index)
    : num_qubits_(num_qubits), gates_(std::move(gates)),
      input_index_(input_index) {
    if (num_qubits_ == 0 || num_qubits_ > Statevector::kMaxQubits) {
        throw DomainError("ansatz needs 1.." +
                          std::to_string(Statevector::kMaxQubits) +
                          " qubits, got " + std::to_string(num_qubits_));
    }
    if (gates_.empty()) {
        throw DomainError("ansatz needs at least one parameterized gate");
    }
    if (input_index_ >= (std::uint64_t{1} << num_qubits_)) {
        throw DomainError("input basis index " + std::to_string(input_index_) +
                          " out of range");
    }
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        try {
            validate_qubits(gates_[k].qubits(), num_qubits_);
        } catch (const DomainError &e) {
            throw DomainError("gate " + std::to_string(k) + ": " + e.what());
        }
    }
}

void require_matching_parameters(const AnsatzCircuit &circuit,
                                 const ParameterVector &params) {
    if (params.size() != circuit.num_parameters()) {
        throw DomainError("circuit has " +
                          std::to_string(circuit.num_parameters()) +
                          " parameters but " + std::to_string(params.size()) +
                          " values were given");
    }
}

BoundAnsatz::BoundAnsatz(const AnsatzCircuit &circuit,
                         const ParameterVector &params) {
    require_matching_parameters(circuit, params);
    const std::size_t p = circuit.num_parameters();
    unitary_.reserve(p);
    unitary_adj_.reserve(p);
    derivative_.reserve(p);
    derivative_adj_.reserve(p);
    for (std::size_t k = 0; k < p; ++k) {
        unitary_.push_back(gate_unitary(circuit.gate(k), params[k]));
        unitary_adj_.push_back(unitary_.back().adjoint());
        derivative_.push_back(gate_derivative(circuit.gate(k), params[k]));
        derivative_adj_.push_back(derivative_.back().adjoint());
    }
}

Statevector prepare_ansatz_state(const AnsatzCircuit &circuit,
                                 const ParameterVector &params,
                                 OpCounter &counter) {
    return prepare_partial_state(circuit, params, circuit.num_parameters(),
                                 counter);
}

Statevector prepare_partial_state(const AnsatzCircuit &circuit,
                                  const ParameterVector &params,
                                  std::size_t upto, OpCounter &counter) {
    require_matching_parameters(circuit, params);
    if (upto > circuit.num_parameters()) {
        throw DomainError("partial state index " + std::to_string(upto) +
                          " exceeds P = " +
                          std::to_string(circuit.num_parameters()));
    }
    Statevector state = circuit.make_input_state();
    for (std::size_t k = 0; k < upto; ++k) {
        apply_operator(state, gate_unitary(circuit.gate(k), params[k]), counter);
    }
    return state;
}

namespace {

void append_layer(std::vector<ParameterizedGate> &gates, std::size_t num_qubits,
                  std::size_t limit, StableRng &rng) {
    for (std::size_t q = 0; q < num_qubits && gates.size() < limit; ++q) {
        switch (rng.below(3)) {
        case 0:
            gates.push_back(ParameterizedGate::rx(q));
            break;
        case 1:
            gates.push_back(ParameterizedGate::ry(q));
            break;
        default:
            gates.push_back(ParameterizedGate::rz(q));
            break;
        }
    }
    if (num_qubits < 2) {
        return;
    }
    for (std::size_t q = 0; q < num_qubits && gates.size() < limit; ++q) {
        gates.push_back(ParameterizedGate::crz(q, (q + 1) % num_qubits));
    }
}

} // namespace

AnsatzCircuit random_ansatz(std::size_t num_qubits, std::size_t num_parameters,
                            std::uint64_t seed) {
    StableRng rng(seed);
    std::vector<ParameterizedGate> gates;
    gates.reserve(num_parameters);
    while (gates.size() < num_parameters) {
        append_layer(gates, num_qubits, num_parameters, rng);
    }
    return {num_qubits, std::move(gates)};
}

AnsatzCircuit random_layered_ansatz(std::size_t num_qubits, std::size_t layers,
                                    std::uint64_t seed) {
    const std::size_t per_layer = num_qubits < 2 ? 1 : 2 * num_qubits;
    return random_ansatz(num_qubits, layers * per_layer, seed);
}

AnsatzCircuit random_pauli_rotation_ansatz(std::size_t num_qubits,
                                          std::size_t num_parameters,
                                          std::uint64_t seed) {
    StableRng rng(seed);
    constexpr std::array<Pauli, 3> labels{Pauli::X, Pauli::Y, Pauli::Z};
    std::vector<ParameterizedGate> gates;
    gates.reserve(num_parameters);
    for (std::size_t k = 0; k < num_parameters; ++k) {
        std::vector<PauliFactor> factors;
        const std::size_t a = rng.below(num_qubits);
        factors.push_back({a, labels[rng.below(3)]});
        if (num_qubits > 1 && rng.below(2) == 1) {
            const std::size_t b = (a + 1 + rng.below(num_qubits - 1)) % num_qubits;
            factors.push_back({b, labels[rng.below(3)]});
        }
        gates.emplace_back(PauliRotation{PauliString(std::move(factors)), 0.5});
    }
    return {num_qubits, std::move(gates)};
}

AnsatzCircuit with_phase(const AnsatzCircuit &circuit, double phase_rate) {
    std::vector<ParameterizedGate> gates;
    gates.reserve(circuit.num_parameters());
    for (const auto &gate : circuit.gates()) {
        const auto *rot = std::get_if<PauliRotation>(&gate.kind());
        if (rot == nullptr) {
            throw DomainError("with_phase: only PauliRotation gates can be phased");
        }
        gates.emplace_back(PhasedPauliRotation{rot->axis, rot->scale, phase_rate});
    }
    return {circuit.num_qubits(), std::move(gates), circuit.input_index()};
}

ParameterVector random_parameters(std::size_t count, std::uint64_t seed) {
    StableRng rng(seed);
    std::vector<double> values(count);
    for (auto &v : values) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return ParameterVector(std::move(values));
}

} // namespace qng
