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
 * Structured operators that can be applied to a statevector.
 *
 * Every gate, gate adjoint and gate derivative in the library is expressed as
 * one of two local forms. Neither is ever expanded to the full 2^N space.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "qng/pauli.hpp"

namespace qng {

using complex_t = std::complex<double>;

/**
 * @brief `a I + b sigma`, optionally conditioned on a control qubit.
 *
 * With a control qubit c the operator is
 * `|0><0|_c (x) off I + |1><1|_c (x) (a I + b sigma)`.
 * A unitary controlled gate has `off = 1`; its parameter derivative has
 * `off = 0` (the projector onto control-1).
 */
struct PauliOperator {
    PauliString pauli;
    complex_t identity_coeff{1.0, 0.0};
    complex_t pauli_coeff{0.0, 0.0};
    std::optional<std::size_t> control;
    complex_t control_off_coeff{1.0, 0.0};
};

/**
 * @brief Dense 2^k x 2^k matrix on k target qubits (k small).
 *
 * Row-major. Bit b of a local row/column index corresponds to `targets[b]`,
 * matching the little-endian amplitude order of Statevector.
 */
struct DenseOperator {
    std::vector<std::size_t> targets;
    std::vector<complex_t> matrix;
};

class GateOperator {
  public:
    GateOperator(PauliOperator op) : op_(std::move(op)) {}  // NOLINT
    GateOperator(DenseOperator op);                          // NOLINT

    /// Plain Pauli string (a = 0, b = 1).
    static GateOperator pauli(PauliString p);

    [[nodiscard]] GateOperator adjoint() const;

    /// All qubits touched, including the control.
    [[nodiscard]] std::vector<std::size_t> qubits() const;

    [[nodiscard]] const std::variant<PauliOperator, DenseOperator> &
    form() const noexcept {
        return op_;
    }

  private:
    std::variant<PauliOperator, DenseOperator> op_;
};

} // namespace qng
