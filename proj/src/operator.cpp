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
#include "qng/operator.hpp"

#include <string>

#include "qng/error.hpp"

namespace qng {

GateOperator::GateOperator(DenseOperator op) : op_(std::move(op)) {
    const auto &d = std::get<DenseOperator>(op_);
    const std::size_t dim = std::size_t{1} << d.targets.size();
    if (d.matrix.size() != dim * dim) {
        throw DomainError("dense operator on " +
                          std::to_string(d.targets.size()) +
                          " qubits needs a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix");
    }
}

GateOperator GateOperator::pauli(PauliString p) {
    PauliOperator op;
    op.pauli = std::move(p);
    op.identity_coeff = 0.0;
    op.pauli_coeff = 1.0;
    return op;
}

GateOperator GateOperator::adjoint() const {
    if (const auto *p = std::get_if<PauliOperator>(&op_)) {
        PauliOperator adj = *p;
        adj.identity_coeff = std::conj(p->identity_coeff);
        adj.pauli_coeff = std::conj(p->pauli_coeff);
        adj.control_off_coeff = std::conj(p->control_off_coeff);
        return adj;
    }
    const auto &d = std::get<DenseOperator>(op_);
    const std::size_t dim = std::size_t{1} << d.targets.size();
    DenseOperator adj{d.targets, std::vector<complex_t>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            adj.matrix[c * dim + r] = std::conj(d.matrix[r * dim + c]);
        }
    }
    return adj;
}

std::vector<std::size_t> GateOperator::qubits() const {
    if (const auto *p = std::get_if<PauliOperator>(&op_)) {
        auto q = p->pauli.qubits();
        if (p->control) {
            q.push_back(*p->control);
        }
        return q;
    }
    return std::get<DenseOperator>(op_).targets;
}

} // namespace qng
