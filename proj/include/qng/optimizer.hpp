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
 * Energy minimization of Pauli-sum Hamiltonians by plain or natural gradient
 * descent.
 *
 * Natural-gradient step: (g + lambda I) dtheta = -dt grad E, g = Re G.
 * Plain step:            dtheta = -dt grad E.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qng/ansatz.hpp"
#include "qng/pauli.hpp"
#include "qng/statevector.hpp"

namespace qng {

struct HamiltonianTerm {
    double coefficient;
    PauliString pauli;
};

/// H = sum_t c_t sigma_t with real c_t; Hermitian by construction.
class PauliSumHamiltonian {
  public:
    PauliSumHamiltonian() = default;
    explicit PauliSumHamiltonian(std::vector<HamiltonianTerm> terms)
        : terms_(std::move(terms)) {}

    void add_term(double coefficient, PauliString pauli) {
        terms_.push_back({coefficient, std::move(pauli)});
    }
    [[nodiscard]] const std::vector<HamiltonianTerm> &terms() const noexcept {
        return terms_;
    }
    /// Throws DomainError if a term touches a qubit >= num_qubits.
    void validate(std::size_t num_qubits) const;

  private:
    std::vector<HamiltonianTerm> terms_;
};

enum class DescentMode { NaturalGradient, PlainGradient };

struct OptimizerConfig {
    double timestep = 0.05;
    double regularization = 1e-8;
    std::size_t max_steps = 500;
    double energy_tolerance = 1e-6;
    DescentMode mode = DescentMode::NaturalGradient;
    /// Passed through to compute_geometric_tensor.
    bool use_diagonal_shortcut = true;

    void validate() const;
};

struct StepRecord {
    std::size_t step;
    double energy;
    double gradient_norm;
    std::vector<double> parameters;
};

struct OptimizationTrace {
    std::vector<StepRecord> steps;
    bool converged = false;
};

/// Re <psi|H|psi>, one clone + one Pauli application per term.
[[nodiscard]] double energy_expectation(const AnsatzCircuit &circuit,
                                        const ParameterVector &params,
                                        const PauliSumHamiltonian &hamiltonian,
                                        OpCounter &counter);

/**
 * @brief dE/dtheta_i = 2 Re <psi|H|d_i psi> by a backward adjoint sweep.
 *
 * For each term sigma: eta = sigma|psi>, then for i = P..1 the psi register
 * is rolled back to |psi>_{i-1}, the derivative image dU_i|psi>_{i-1} is
 * overlapped with eta, and eta <- U_i^dag eta. Cost per term: 3P + 1 gate
 * applications and P + 2 clones, on top of one preparation of |psi>.
 */
[[nodiscard]] std::vector<double>
energy_gradient(const AnsatzCircuit &circuit, const ParameterVector &params,
                const PauliSumHamiltonian &hamiltonian, OpCounter &counter);

struct StepResult {
    ParameterVector parameters;
    StepRecord record;
    /// ||(g + lambda I) dtheta + dt grad E||_inf; zero in plain mode.
    double solve_residual = 0.0;
};

/**
 * @brief One descent step from `params`.
 *
 * The returned record describes the starting point (energy and gradient at
 * `params`). Throws SingularMetricError when lambda = 0 and g is singular.
 */
[[nodiscard]] StepResult
natural_gradient_step(const AnsatzCircuit &circuit,
                      const ParameterVector &params,
                      const PauliSumHamiltonian &hamiltonian,
                      const OptimizerConfig &config, OpCounter &counter,
                      std::size_t step_index = 0);

/// Iterates until max_steps or |E_k - E_{k-1}| < energy_tolerance. The trace
/// holds one record per evaluated point, starting with the initial one.
[[nodiscard]] OptimizationTrace
run_optimization(const AnsatzCircuit &circuit, const ParameterVector &initial,
                 const PauliSumHamiltonian &hamiltonian,
                 const OptimizerConfig &config, OpCounter &counter);

/// "step,energy,grad_norm" CSV.
void write_trace_csv(std::ostream &out, const OptimizationTrace &trace);

} // namespace qng
