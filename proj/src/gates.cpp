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
#include "qng/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qng/error.hpp"

namespace qng {

namespace {

constexpr complex_t kI{0.0, 1.0};

PauliString single_axis(char axis, std::size_t q) {
    const Pauli label = axis == 'X' ? Pauli::X : axis == 'Y' ? Pauli::Y : Pauli::Z;
    return PauliString({{q, label}});
}

/// cos(s t) I + i sin(s t) sigma, times `phase`.
PauliOperator rotation(const PauliString &axis, double scale, double theta,
                       complex_t phase = 1.0) {
    PauliOperator op;
    op.pauli = axis;
    op.identity_coeff = phase * std::cos(scale * theta);
    op.pauli_coeff = phase * kI * std::sin(scale * theta);
    return op;
}

/// i s sigma exp(i s t sigma) = -s sin(s t) I + i s cos(s t) sigma.
PauliOperator rotation_derivative(const PauliString &axis, double scale,
                                  double theta) {
    PauliOperator op;
    op.pauli = axis;
    op.identity_coeff = -scale * std::sin(scale * theta);
    op.pauli_coeff = kI * scale * std::cos(scale * theta);
    return op;
}

/// Pauli string re-indexed onto positions within `support`.
PauliString localize(const PauliString &p,
                     const std::vector<std::size_t> &support) {
    std::vector<PauliFactor> local;
    for (const auto &f : p.factors()) {
        const auto it = std::find(support.begin(), support.end(), f.qubit);
        local.push_back(
            {static_cast<std::size_t>(it - support.begin()), f.label});
    }
    return PauliString(std::move(local));
}

Eigen::MatrixXcd pauli_matrix(const PauliString &local, std::size_t width) {
    const std::size_t dim = std::size_t{1} << width;
    static constexpr complex_t kIPowers[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const complex_t yphase = kIPowers[local.num_y() % 4];
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        const bool odd = (std::popcount(k & local.phase_mask()) & 1) != 0;
        const auto row = static_cast<Eigen::Index>(k ^ local.flip_mask());
        m(row, static_cast<Eigen::Index>(k)) = odd ? -yphase : yphase;
    }
    return m;
}

DenseOperator to_dense(const std::vector<std::size_t> &targets,
                       const Eigen::MatrixXcd &m) {
    DenseOperator op{targets, std::vector<complex_t>(
                                  static_cast<std::size_t>(m.size()))};
    const auto dim = m.rows();
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            op.matrix[static_cast<std::size_t>(r * dim + c)] = m(r, c);
        }
    }
    return op;
}

struct LocalGenerator {
    Eigen::MatrixXcd value;      // H(theta)
    Eigen::MatrixXcd derivative; // H'(theta)
};

LocalGenerator local_generator(const GateGenerator &gen, double theta) {
    const auto &support = gen.support();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << support.size());
    LocalGenerator out{Eigen::MatrixXcd::Zero(dim, dim),
                       Eigen::MatrixXcd::Zero(dim, dim)};
    for (const auto &term : gen.terms()) {
        const Eigen::MatrixXcd sigma =
            pauli_matrix(localize(term.pauli, support), support.size());
        out.value += term.coefficient.value(theta) * sigma;
        out.derivative += term.coefficient.derivative(theta) * sigma;
    }
    return out;
}

/// exp(iH) and its derivative along H' via the Daleckii-Krein formula, which
/// stays exact when H(theta) and H'(theta) do not commute.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>
generated_unitary_and_derivative(const GateGenerator &gen, double theta) {
    const LocalGenerator h = local_generator(gen, theta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.value);
    const Eigen::MatrixXcd &v = eig.eigenvectors();
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    const auto dim = lambda.size();

    Eigen::VectorXcd phases(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        phases(k) = std::exp(kI * lambda(k));
    }
    Eigen::MatrixXcd unitary = v * phases.asDiagonal() * v.adjoint();

    Eigen::MatrixXcd rotated = v.adjoint() * h.derivative * v;
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index l = 0; l < dim; ++l) {
            const double half_gap = 0.5 * (lambda(k) - lambda(l));
            const double sinc =
                std::abs(half_gap) < 1e-8 ? 1.0 - half_gap * half_gap / 6.0
                                          : std::sin(half_gap) / half_gap;
            rotated(k, l) *=
                kI * std::exp(kI * 0.5 * (lambda(k) + lambda(l))) * sinc;
        }
    }
    Eigen::MatrixXcd derivative = v * rotated * v.adjoint();
    return {std::move(unitary), std::move(derivative)};
}

} // namespace

CoefficientFunction CoefficientFunction::linear(double slope, double offset) {
    return {[slope, offset](double t) { return slope * t + offset; },
            [slope](double) { return slope; },
            std::make_pair(slope, offset)};
}

GateGenerator::GateGenerator(std::vector<GeneratorTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw DomainError("gate generator needs at least one term");
    }
    for (const auto &t : terms_) {
        if (!t.coefficient.value || !t.coefficient.derivative) {
            throw DomainError("generator term is missing f or f'");
        }
        for (auto q : t.pauli.qubits()) {
            support_.push_back(q);
        }
    }
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()),
                   support_.end());
    if (support_.empty()) {
        throw DomainError("gate generator acts on no qubits");
    }
    if (support_.size() > kMaxGeneratorSupport) {
        throw UnsupportedGateError(
            "generated gate spans " + std::to_string(support_.size()) +
            " qubits; at most " + std::to_string(kMaxGeneratorSupport) +
            " are supported");
    }
}

ParameterizedGate::ParameterizedGate(Kind kind) : kind_(std::move(kind)) {
    std::visit(
        [this](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, GeneralGenerated>) {
                qubits_ = g.generator.support();
            } else {
                qubits_ = g.axis.qubits();
                if constexpr (std::is_same_v<T, ControlledPauliRotation>) {
                    if (g.axis.acts_on(g.control)) {
                        throw DomainError("control qubit " +
                                          std::to_string(g.control) +
                                          " is also a target");
                    }
                    qubits_.insert(qubits_.begin(), g.control);
                }
            }
        },
        kind_);
}

ParameterizedGate ParameterizedGate::axis_rotation(char axis, std::size_t q) {
    return PauliRotation{single_axis(axis, q), 0.5};
}

ParameterizedGate ParameterizedGate::controlled_axis_rotation(char axis,
                                                              std::size_t c,
                                                              std::size_t q) {
    return ControlledPauliRotation{c, single_axis(axis, q), 0.5};
}

GateOperator gate_unitary(const ParameterizedGate &gate, double theta) {
    return std::visit(
        [theta](const auto &g) -> GateOperator {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PauliRotation>) {
                return rotation(g.axis, g.scale, theta);
            } else if constexpr (std::is_same_v<T, ControlledPauliRotation>) {
                PauliOperator op = rotation(g.axis, g.scale, theta);
                op.control = g.control;
                op.control_off_coeff = 1.0;
                return op;
            } else if constexpr (std::is_same_v<T, PhasedPauliRotation>) {
                return rotation(g.axis, g.scale, theta,
                                std::exp(kI * g.phase_rate * theta));
            } else {
                auto [u, du] = generated_unitary_and_derivative(g.generator, theta);
                return to_dense(g.generator.support(), u);
            }
        },
        gate.kind());
}

GateOperator gate_derivative(const ParameterizedGate &gate, double theta) {
    return std::visit(
        [theta](const auto &g) -> GateOperator {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PauliRotation>) {
                return rotation_derivative(g.axis, g.scale, theta);
            } else if constexpr (std::is_same_v<T, ControlledPauliRotation>) {
                PauliOperator op = rotation_derivative(g.axis, g.scale, theta);
                op.control = g.control;
                op.control_off_coeff = 0.0;
                return op;
            } else if constexpr (std::is_same_v<T, PhasedPauliRotation>) {
                // d/dt [p(t) R(t)] = i r p R + p R'
                const complex_t p = std::exp(kI * g.phase_rate * theta);
                const double c = std::cos(g.scale * theta);
                const double s = std::sin(g.scale * theta);
                PauliOperator op;
                op.pauli = g.axis;
                op.identity_coeff = p * (kI * g.phase_rate * c - g.scale * s);
                op.pauli_coeff = p * (-g.phase_rate * s + kI * g.scale * c);
                return op;
            } else {
                auto [u, du] = generated_unitary_and_derivative(g.generator, theta);
                return to_dense(g.generator.support(), du);
            }
        },
        gate.kind());
}

std::optional<double> diagonal_value(const ParameterizedGate &gate,
                                     double /*theta*/,
                                     const Statevector *pre_state) {
    if (const auto *r = std::get_if<PauliRotation>(&gate.kind())) {
        return r->scale * r->scale;
    }
    if (const auto *c = std::get_if<ControlledPauliRotation>(&gate.kind())) {
        if (pre_state == nullptr) {
            return std::nullopt;
        }
        return c->scale * c->scale * probability_of_one(*pre_state, c->control);
    }
    return std::nullopt;
}

} // namespace qng
