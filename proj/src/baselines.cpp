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
#include "qng/baselines.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "qng/error.hpp"

namespace qng {

namespace {

constexpr std::array<BaselineId, 7> kAllBaselines = {
    BaselineId::Alg2, BaselineId::Alg3, BaselineId::Alg4, BaselineId::Alg5,
    BaselineId::Alg6, BaselineId::Alg7, BaselineId::Alg8};

/// Applies U_{from} .. U_{to-1} in ascending order.
void apply_forward(Statevector &s, const BoundAnsatz &ops, std::size_t from,
                   std::size_t to, OpCounter &counter) {
    for (std::size_t k = from; k < to; ++k) {
        apply_operator(s, ops.unitary(k), counter);
    }
}

/// Applies U_{hi-1}^dag .. U_{lo}^dag, i.e. descending k in [lo, hi).
void apply_backward_adjoint(Statevector &s, const BoundAnsatz &ops,
                            std::size_t lo, std::size_t hi,
                            OpCounter &counter) {
    for (std::size_t k = hi; k-- > lo;) {
        apply_operator(s, ops.unitary_adjoint(k), counter);
    }
}

Eigen::MatrixXcd alg2_full(const AnsatzCircuit &circuit,
                           const ParameterVector &params, OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector phi_a(circuit.num_qubits());
    Statevector phi_b(circuit.num_qubits());

    const auto n = static_cast<Eigen::Index>(p);
    Eigen::MatrixXcd l(n, n);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            clone_into(in, phi_a, counter);
            clone_into(in, phi_b, counter);
            apply_forward(phi_a, ops, 0, i, counter);
            apply_operator(phi_a, ops.derivative(i), counter);
            apply_forward(phi_a, ops, i + 1, p, counter);
            apply_forward(phi_b, ops, 0, j, counter);
            apply_operator(phi_b, ops.derivative(j), counter);
            apply_forward(phi_b, ops, j + 1, p, counter);
            l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                inner_product(phi_a, phi_b, counter);
        }
    }
    return l;
}

LiTensor alg3(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector phi(circuit.num_qubits());

    LiTensor li(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            clone_into(in, phi, counter);
            apply_forward(phi, ops, 0, j, counter);
            apply_operator(phi, ops.derivative(j), counter);
            apply_backward_adjoint(phi, ops, i + 1, j + 1, counter);
            apply_operator(phi, ops.derivative_adjoint(i), counter);
            apply_backward_adjoint(phi, ops, 0, i, counter);
            li.set(i, j, inner_product(in, phi, counter));
        }
    }
    return li;
}

LiTensor alg4(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector psi(circuit.num_qubits());
    Statevector phi(circuit.num_qubits());
    Statevector lambda(circuit.num_qubits());

    LiTensor li(p);
    clone_into(in, psi, counter);
    for (std::size_t j = 0; j < p; ++j) {
        clone_into(psi, phi, counter);
        apply_operator(phi, ops.derivative(j), counter);
        for (std::size_t i = 0; i <= j; ++i) {
            clone_into(phi, lambda, counter);
            apply_backward_adjoint(lambda, ops, i + 1, j + 1, counter);
            apply_operator(lambda, ops.derivative_adjoint(i), counter);
            apply_backward_adjoint(lambda, ops, 0, i, counter);
            li.set(i, j, inner_product(in, lambda, counter));
        }
        apply_operator(psi, ops.unitary(j), counter);
    }
    return li;
}

// The listings for Alg5 and Alg6 end each j iteration with phi <- U_1^dag
// whose result is never read. It is skipped here; the closed-form gate
// counts do not include it.

LiTensor alg5(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector psi(circuit.num_qubits());
    Statevector phi(circuit.num_qubits());
    Statevector lambda(circuit.num_qubits());

    LiTensor li(p);
    clone_into(in, psi, counter);
    for (std::size_t j = 0; j < p; ++j) {
        clone_into(psi, phi, counter);
        apply_operator(phi, ops.derivative(j), counter);
        for (std::size_t i = j + 1; i-- > 0;) {
            clone_into(phi, lambda, counter);
            apply_operator(lambda, ops.derivative_adjoint(i), counter);
            apply_backward_adjoint(lambda, ops, 0, i, counter);
            li.set(i, j, inner_product(in, lambda, counter));
            if (i > 0) {
                apply_operator(phi, ops.unitary_adjoint(i), counter);
            }
        }
        apply_operator(psi, ops.unitary(j), counter);
    }
    return li;
}

LiTensor alg6(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector psi(circuit.num_qubits());
    Statevector phi(circuit.num_qubits());
    Statevector lambda(circuit.num_qubits());
    Statevector mu(circuit.num_qubits());

    LiTensor li(p);
    clone_into(in, psi, counter);
    for (std::size_t j = 0; j < p; ++j) {
        clone_into(psi, mu, counter);
        clone_into(psi, phi, counter);
        apply_operator(phi, ops.derivative(j), counter);
        for (std::size_t i = j + 1; i-- > 0;) {
            clone_into(phi, lambda, counter);
            apply_operator(lambda, ops.derivative_adjoint(i), counter);
            li.set(i, j, inner_product(mu, lambda, counter));
            if (i > 0) {
                apply_operator(phi, ops.unitary_adjoint(i), counter);
                apply_operator(mu, ops.unitary_adjoint(i - 1), counter);
            }
        }
        apply_operator(psi, ops.unitary(j), counter);
    }
    return li;
}

std::vector<Statevector> make_registers(std::size_t count,
                                        std::size_t num_qubits) {
    std::vector<Statevector> regs;
    regs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        regs.emplace_back(num_qubits);
    }
    return regs;
}

LiTensor overlaps_of_stored_states(const std::vector<Statevector> &phis,
                                   OpCounter &counter) {
    LiTensor li(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) {
        for (std::size_t j = i; j < phis.size(); ++j) {
            li.set(i, j, inner_product(phis[i], phis[j], counter));
        }
    }
    return li;
}

LiTensor alg7(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    std::vector<Statevector> phis = make_registers(p, circuit.num_qubits());

    for (std::size_t i = 0; i < p; ++i) {
        clone_into(in, phis[i], counter);
        apply_forward(phis[i], ops, 0, i, counter);
        apply_operator(phis[i], ops.derivative(i), counter);
        apply_forward(phis[i], ops, i + 1, p, counter);
    }
    return overlaps_of_stored_states(phis, counter);
}

LiTensor alg8(const AnsatzCircuit &circuit, const ParameterVector &params,
              OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    std::vector<Statevector> phis = make_registers(p, circuit.num_qubits());
    Statevector psi(circuit.num_qubits());

    clone_into(in, psi, counter);
    for (std::size_t i = 0; i < p; ++i) {
        clone_into(psi, phis[i], counter);
        apply_operator(phis[i], ops.derivative(i), counter);
        apply_forward(phis[i], ops, i + 1, p, counter);
        apply_operator(psi, ops.unitary(i), counter);
    }
    return overlaps_of_stored_states(phis, counter);
}

LiTensor pack_upper(const Eigen::MatrixXcd &full) {
    const auto p = static_cast<std::size_t>(full.rows());
    LiTensor li(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            li.set(i, j,
                   full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
    }
    return li;
}

} // namespace

std::span<const BaselineId> all_baselines() noexcept { return kAllBaselines; }

std::string_view baseline_name(BaselineId id) noexcept {
    switch (id) {
    case BaselineId::Alg2:
        return "alg2";
    case BaselineId::Alg3:
        return "alg3";
    case BaselineId::Alg4:
        return "alg4";
    case BaselineId::Alg5:
        return "alg5";
    case BaselineId::Alg6:
        return "alg6";
    case BaselineId::Alg7:
        return "alg7";
    case BaselineId::Alg8:
        return "alg8";
    }
    return "?";
}

std::optional<BaselineId> parse_baseline(std::string_view name) {
    for (auto id : kAllBaselines) {
        if (baseline_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

CostEstimate cost_model(BaselineId id, std::uint64_t p) {
    const std::uint64_t p2 = p * p;
    const std::uint64_t p3 = p2 * p;
    switch (id) {
    case BaselineId::Alg2:
        return {2 * p3, 2 * p2, 2};
    case BaselineId::Alg3:
        return {(4 * p3 + 6 * p2 + 2 * p) / 6, (p2 + p) / 2, 1};
    case BaselineId::Alg4:
        return {(2 * p3 + 3 * p2 + 13 * p) / 6, (p2 + 3 * p + 2) / 2, 3};
    case BaselineId::Alg5:
        return {(p3 + 6 * p2 + 11 * p) / 6, (p2 + 3 * p + 2) / 2, 3};
    case BaselineId::Alg6:
        return {(3 * p2 + 3 * p) / 2, (p2 + 5 * p + 2) / 2, 4};
    case BaselineId::Alg7:
        return {p2 + p, p, p};
    case BaselineId::Alg8:
        return {(p2 + 3 * p) / 2, p + 1, p + 1};
    }
    return {0, 0, 0};
}

std::uint64_t inner_product_count(BaselineId id, std::uint64_t p) {
    return id == BaselineId::Alg2 ? p * p : (p * p + p) / 2;
}

BaselineOptions baseline_options_from_env() {
    BaselineOptions options;
    if (const char *env = std::getenv("QNG_MEMORY_BUDGET_BYTES")) {
        const std::string_view text(env);
        std::uint64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw DomainError("QNG_MEMORY_BUDGET_BYTES is not an integer: \"" +
                              std::string(text) + "\"");
        }
        options.memory_budget_bytes = value;
    }
    return options;
}

void check_memory_budget(BaselineId id, const AnsatzCircuit &circuit,
                         const BaselineOptions &options) {
    if (id != BaselineId::Alg7 && id != BaselineId::Alg8) {
        return;
    }
    const long double needed =
        static_cast<long double>(circuit.num_parameters() + 1) *
        static_cast<long double>(std::uint64_t{1} << circuit.num_qubits()) *
        sizeof(complex_t);
    if (needed > static_cast<long double>(options.memory_budget_bytes)) {
        throw ResourceError(
            std::string(baseline_name(id)) + " would store " +
            std::to_string(circuit.num_parameters() + 1) + " statevectors of " +
            std::to_string(circuit.num_qubits()) +
            " qubits, exceeding the memory budget of " +
            std::to_string(options.memory_budget_bytes) + " bytes");
    }
}

LiTensor compute_li_tensor(BaselineId id, const AnsatzCircuit &circuit,
                           const ParameterVector &params, OpCounter &counter,
                           const BaselineOptions &options) {
    require_matching_parameters(circuit, params);
    check_memory_budget(id, circuit, options);
    switch (id) {
    case BaselineId::Alg2:
        return pack_upper(alg2_full(circuit, params, counter));
    case BaselineId::Alg3:
        return alg3(circuit, params, counter);
    case BaselineId::Alg4:
        return alg4(circuit, params, counter);
    case BaselineId::Alg5:
        return alg5(circuit, params, counter);
    case BaselineId::Alg6:
        return alg6(circuit, params, counter);
    case BaselineId::Alg7:
        return alg7(circuit, params, counter);
    case BaselineId::Alg8:
        return alg8(circuit, params, counter);
    }
    throw DomainError("unknown baseline");
}

Eigen::MatrixXcd compute_full_li_matrix(const AnsatzCircuit &circuit,
                                        const ParameterVector &params,
                                        OpCounter &counter) {
    require_matching_parameters(circuit, params);
    return alg2_full(circuit, params, counter);
}

} // namespace qng
