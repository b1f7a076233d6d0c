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
 * Parameterized gate families with their unitaries and parameter
 * derivatives.
 *
 * Rotation convention: U(theta) = exp(i * scale * theta * sigma), default
 * scale 1/2, so RX(theta) = cos(theta/2) I + i sin(theta/2) X.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qng/operator.hpp"
#include "qng/pauli.hpp"
#include "qng/statevector.hpp"

namespace qng {

/// Largest support (in qubits) of a GeneralGenerated gate.
inline constexpr std::size_t kMaxGeneratorSupport = 3;

/// Real coefficient function f(theta) together with f'(theta).
struct CoefficientFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    /// Set when f(theta) = slope * theta + offset; needed for serialization.
    std::optional<std::pair<double, double>> affine;

    static CoefficientFunction linear(double slope, double offset = 0.0);
};

struct GeneratorTerm {
    CoefficientFunction coefficient;
    PauliString pauli;
};

/// V(theta) = exp(i sum_j f_j(theta) sigma_j).
class GateGenerator {
  public:
    explicit GateGenerator(std::vector<GeneratorTerm> terms);

    [[nodiscard]] const std::vector<GeneratorTerm> &terms() const noexcept {
        return terms_;
    }
    /// Sorted union of the qubits of all terms.
    [[nodiscard]] const std::vector<std::size_t> &support() const noexcept {
        return support_;
    }

  private:
    std::vector<GeneratorTerm> terms_;
    std::vector<std::size_t> support_;
};

struct PauliRotation {
    PauliString axis;
    double scale = 0.5;
};

struct ControlledPauliRotation {
    std::size_t control;
    PauliString axis;
    double scale = 0.5;
};

struct GeneralGenerated {
    GateGenerator generator;
};

/// e^{i phase_rate theta} exp(i scale theta sigma): a rotation carrying a
/// parameter-dependent global phase.
struct PhasedPauliRotation {
    PauliString axis;
    double scale = 0.5;
    double phase_rate = 0.0;
};

class ParameterizedGate {
  public:
    using Kind = std::variant<PauliRotation, ControlledPauliRotation,
                              GeneralGenerated, PhasedPauliRotation>;

    ParameterizedGate(Kind kind);  // NOLINT
    ParameterizedGate(PauliRotation g) : ParameterizedGate(Kind(std::move(g))) {}  // NOLINT
    ParameterizedGate(ControlledPauliRotation g)  // NOLINT
        : ParameterizedGate(Kind(std::move(g))) {}
    ParameterizedGate(GeneralGenerated g) : ParameterizedGate(Kind(std::move(g))) {}  // NOLINT
    ParameterizedGate(PhasedPauliRotation g)  // NOLINT
        : ParameterizedGate(Kind(std::move(g))) {}

    static ParameterizedGate rx(std::size_t q) { return axis_rotation('X', q); }
    static ParameterizedGate ry(std::size_t q) { return axis_rotation('Y', q); }
    static ParameterizedGate rz(std::size_t q) { return axis_rotation('Z', q); }
    static ParameterizedGate crx(std::size_t c, std::size_t q) {
        return controlled_axis_rotation('X', c, q);
    }
    static ParameterizedGate cry(std::size_t c, std::size_t q) {
        return controlled_axis_rotation('Y', c, q);
    }
    static ParameterizedGate crz(std::size_t c, std::size_t q) {
        return controlled_axis_rotation('Z', c, q);
    }

    [[nodiscard]] const Kind &kind() const noexcept { return kind_; }

    /// All qubits the gate touches (control included), validated distinct.
    [[nodiscard]] const std::vector<std::size_t> &qubits() const noexcept {
        return qubits_;
    }

  private:
    static ParameterizedGate axis_rotation(char axis, std::size_t q);
    static ParameterizedGate controlled_axis_rotation(char axis,
                                                      std::size_t c,
                                                      std::size_t q);

    Kind kind_;
    std::vector<std::size_t> qubits_;
};

[[nodiscard]] GateOperator gate_unitary(const ParameterizedGate &gate,
                                        double theta);

/// dU/dtheta. Not unitary in general.
[[nodiscard]] GateOperator gate_derivative(const ParameterizedGate &gate,
                                           double theta);

/**
 * @brief L_ii = <phi|phi> for phi = dU/dtheta |pre_state>, when it is known
 * without simulating the derivative.
 *
 * - PauliRotation: scale^2, independent of theta and of the state.
 * - ControlledPauliRotation: scale^2 * P(control = 1) in `pre_state`;
 *   nullopt when `pre_state` is null.
 * - GeneralGenerated, PhasedPauliRotation: nullopt; the caller must take the
 *   inner product explicitly.
 */
[[nodiscard]] std::optional<double>
diagonal_value(const ParameterizedGate &gate, double theta,
               const Statevector *pre_state);

} // namespace qng
