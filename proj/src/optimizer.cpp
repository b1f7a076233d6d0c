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
#include "qng/optimizer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "qng/error.hpp"
#include "qng/metric.hpp"

namespace qng {

void PauliSumHamiltonian::validate(std::size_t num_qubits) const {
    for (const auto &t : terms_) {
        validate_qubits(t.pauli.qubits(), num_qubits);
    }
}

void OptimizerConfig::validate() const {
    if (!(timestep > 0.0)) {
        throw DomainError("timestep must be positive");
    }
    if (!(regularization >= 0.0)) {
        throw DomainError("regularization must be non-negative");
    }
    if (!(energy_tolerance > 0.0)) {
        throw DomainError("energy tolerance must be positive");
    }
}

namespace {

double expectation_in_state(const Statevector &psi,
                            const PauliSumHamiltonian &hamiltonian,
                            OpCounter &counter) {
    Statevector work(psi.num_qubits());
    double energy = 0.0;
    for (const auto &term : hamiltonian.terms()) {
        clone_into(psi, work, counter);
        apply_operator(work, GateOperator::pauli(term.pauli), counter);
        energy += term.coefficient * inner_product(psi, work, counter).real();
    }
    return energy;
}

double euclidean_norm(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

} // namespace

double energy_expectation(const AnsatzCircuit &circuit,
                          const ParameterVector &params,
                          const PauliSumHamiltonian &hamiltonian,
                          OpCounter &counter) {
    hamiltonian.validate(circuit.num_qubits());
    const Statevector psi = prepare_ansatz_state(circuit, params, counter);
    return expectation_in_state(psi, hamiltonian, counter);
}

std::vector<double> energy_gradient(const AnsatzCircuit &circuit,
                                    const ParameterVector &params,
                                    const PauliSumHamiltonian &hamiltonian,
                                    OpCounter &counter) {
    hamiltonian.validate(circuit.num_qubits());
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const std::size_t n = circuit.num_qubits();

    const Statevector final_state = prepare_ansatz_state(circuit, params, counter);
    Statevector psi(n);
    Statevector eta(n);
    Statevector mu(n);

    std::vector<double> grad(p, 0.0);
    for (const auto &term : hamiltonian.terms()) {
        clone_into(final_state, psi, counter);
        clone_into(final_state, eta, counter);
        apply_operator(eta, GateOperator::pauli(term.pauli), counter);
        for (std::size_t i = p; i-- > 0;) {
            // psi -> |psi>_{i-1}; eta = U_{i+1}^dag .. U_P^dag sigma |psi>
            apply_operator(psi, ops.unitary_adjoint(i), counter);
            clone_into(psi, mu, counter);
            apply_operator(mu, ops.derivative(i), counter);
            grad[i] += 2.0 * term.coefficient *
                       inner_product(eta, mu, counter).real();
            apply_operator(eta, ops.unitary_adjoint(i), counter);
        }
    }
    return grad;
}

StepResult natural_gradient_step(const AnsatzCircuit &circuit,
                                 const ParameterVector &params,
                                 const PauliSumHamiltonian &hamiltonian,
                                 const OptimizerConfig &config,
                                 OpCounter &counter, std::size_t step_index) {
    config.validate();
    require_matching_parameters(circuit, params);
    const double energy = energy_expectation(circuit, params, hamiltonian, counter);
    const std::vector<double> grad =
        energy_gradient(circuit, params, hamiltonian, counter);
    const std::size_t p = params.size();

    StepResult result{params, {step_index, energy, euclidean_norm(grad),
                               params.vector()}};

    if (config.mode == DescentMode::PlainGradient) {
        for (std::size_t k = 0; k < p; ++k) {
            result.parameters[k] -= config.timestep * grad[k];
        }
        return result;
    }

    const GeometricTensor tensor = compute_geometric_tensor(
        circuit, params, counter, config.use_diagonal_shortcut);
    const auto n = static_cast<Eigen::Index>(p);
    Eigen::MatrixXd system = tensor.matrix.real();
    system.diagonal().array() += config.regularization;
    Eigen::VectorXd rhs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        rhs(k) = -config.timestep * grad[static_cast<std::size_t>(k)];
    }

    // G = L - T^* T cancels, so pivots below a few ulps of |L| are zero.
    const double zero_pivot = 1e-12 * static_cast<double>(p) *
                              std::max(1.0, tensor.li.to_matrix().cwiseAbs().maxCoeff());
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
    if (ldlt.info() != Eigen::Success || ldlt.rcond() < 1e-14 ||
        ldlt.vectorD().cwiseAbs().minCoeff() <= zero_pivot) {
        throw SingularMetricError(
            "metric g + lambda I is singular (lambda = " +
            std::to_string(config.regularization) +
            "); use a positive regularization");
    }
    const Eigen::VectorXd delta = ldlt.solve(rhs);
    result.solve_residual = (system * delta - rhs).cwiseAbs().maxCoeff();
    for (std::size_t k = 0; k < p; ++k) {
        result.parameters[k] += delta(static_cast<Eigen::Index>(k));
    }
    return result;
}

OptimizationTrace run_optimization(const AnsatzCircuit &circuit,
                                   const ParameterVector &initial,
                                   const PauliSumHamiltonian &hamiltonian,
                                   const OptimizerConfig &config,
                                   OpCounter &counter) {
    config.validate();
    require_matching_parameters(circuit, initial);
    OptimizationTrace trace;
    ParameterVector params = initial;
    for (std::size_t k = 0;; ++k) {
        if (k == config.max_steps) {
            const double energy =
                energy_expectation(circuit, params, hamiltonian, counter);
            const auto grad = energy_gradient(circuit, params, hamiltonian, counter);
            trace.steps.push_back(
                {k, energy, euclidean_norm(grad), params.vector()});
            break;
        }
        StepResult step =
            natural_gradient_step(circuit, params, hamiltonian, config, counter, k);
        trace.steps.push_back(std::move(step.record));
        if (k > 0) {
            const double change = std::abs(trace.steps[k].energy -
                                           trace.steps[k - 1].energy);
            if (change < config.energy_tolerance) {
                trace.converged = true;
                break;
            }
        }
        params = std::move(step.parameters);
    }
    return trace;
}

void write_trace_csv(std::ostream &out, const OptimizationTrace &trace) {
    out << "step,energy,grad_norm\n";
    std::array<char, 32> buf{};
    for (const auto &rec : trace.steps) {
        std::string line = std::to_string(rec.step);
        for (double v : {rec.energy, rec.gradient_norm}) {
            auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            line += ',';
            line.append(buf.data(), end);
        }
        line += '\n';
        out << line;
    }
}

} // namespace qng
