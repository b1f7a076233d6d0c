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
#include "qng/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "qng/baselines.hpp"
#include "qng/metric.hpp"

namespace qng {

namespace {

constexpr std::size_t kQubits = 4;
constexpr std::size_t kParams = 8;
constexpr double kEquivalenceTol = 1e-10;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kFiniteDifferenceStep = 1e-5;
constexpr double kGaugeTol = 1e-9;
constexpr double kGaugeMinMove = 1e-3;
constexpr double kGaugeRate = 0.7;

struct Case {
    AnsatzCircuit circuit;
    ParameterVector params;
};

std::vector<Case> make_cases(const VerifyConfig &config) {
    const std::size_t count = config.quick ? 3 : 20;
    std::vector<Case> cases;
    for (std::size_t c = 0; c < count; ++c) {
        const std::uint64_t s = config.seed + 1000 * c;
        cases.push_back({random_ansatz(kQubits, kParams, s),
                         random_parameters(kParams, s + 1)});
    }
    return cases;
}

double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

CheckResult finish(std::string name, double dev, double tol,
                   std::string detail = {}) {
    return {std::move(name), dev <= tol, dev, tol, std::move(detail)};
}

CheckResult check_li_equivalence(const std::vector<Case> &cases, double tol) {
    double dev = 0.0;
    for (const auto &c : cases) {
        OpCounter counter;
        std::vector<Eigen::MatrixXcd> tensors;
        tensors.push_back(
            compute_geometric_tensor(c.circuit, c.params, counter).li.to_matrix());
        for (BaselineId id : all_baselines()) {
            tensors.push_back(
                compute_li_tensor(id, c.circuit, c.params, counter).to_matrix());
        }
        for (std::size_t a = 0; a < tensors.size(); ++a) {
            for (std::size_t b = a + 1; b < tensors.size(); ++b) {
                dev = std::max(dev, max_abs_diff(tensors[a], tensors[b]));
            }
        }
    }
    return finish("li_pairwise_equivalence", dev, tol);
}

CheckResult check_g_against_naive(const std::vector<Case> &cases, double tol) {
    double dev = 0.0;
    for (const auto &c : cases) {
        OpCounter counter;
        const auto g = compute_geometric_tensor(c.circuit, c.params, counter);
        const auto naive_l = compute_full_li_matrix(c.circuit, c.params, counter);
        const auto t = compute_berry_vector(c.circuit, c.params, counter);
        dev = std::max(dev,
                       max_abs_diff(g.matrix, assemble_geometric_tensor(naive_l, t)));
    }
    return finish("g_vs_naive_l_minus_tt", dev, tol);
}

std::vector<Statevector> shifted_derivatives(const Case &c, double h) {
    std::vector<Statevector> out;
    OpCounter counter;
    for (std::size_t k = 0; k < c.params.size(); ++k) {
        ParameterVector plus = c.params;
        ParameterVector minus = c.params;
        plus[k] += h;
        minus[k] -= h;
        const auto up = prepare_ansatz_state(c.circuit, plus, counter);
        const auto down = prepare_ansatz_state(c.circuit, minus, counter);
        Statevector d(c.circuit.num_qubits());
        for (std::size_t a = 0; a < d.size(); ++a) {
            d.amplitudes()[a] = (up[a] - down[a]) / (2.0 * h);
        }
        out.push_back(std::move(d));
    }
    return out;
}

CheckResult check_finite_difference(const std::vector<Case> &cases, double tol) {
    double dev = 0.0;
    for (const auto &c : cases) {
        OpCounter counter;
        const auto g = compute_geometric_tensor(c.circuit, c.params, counter);
        const auto psi = prepare_ansatz_state(c.circuit, c.params, counter);
        const auto d = shifted_derivatives(c, kFiniteDifferenceStep);
        const std::size_t p = c.params.size();
        for (std::size_t i = 0; i < p; ++i) {
            const complex_t ti = inner_product(psi, d[i], counter);
            for (std::size_t j = 0; j < p; ++j) {
                const complex_t tj = inner_product(psi, d[j], counter);
                const complex_t fd =
                    inner_product(d[i], d[j], counter) - std::conj(ti) * tj;
                dev = std::max(dev, std::abs(g.matrix(static_cast<Eigen::Index>(i),
                                                      static_cast<Eigen::Index>(j)) -
                                             fd));
            }
        }
    }
    return finish("finite_difference_g", dev, tol);
}

CheckResult check_diagonal_shortcut(const std::vector<Case> &cases, double tol) {
    double dev = 0.0;
    for (const auto &c : cases) {
        OpCounter counter;
        const auto fast = compute_geometric_tensor(c.circuit, c.params, counter, true);
        const auto slow = compute_geometric_tensor(c.circuit, c.params, counter, false);
        for (std::size_t k = 0; k < c.params.size(); ++k) {
            dev = std::max(dev, std::abs(fast.li(k, k) - slow.li(k, k)));
        }
    }
    return finish("diagonal_shortcut", dev, tol);
}

CheckResult check_gauge(const VerifyConfig &config, double tol) {
    const std::size_t count = config.quick ? 3 : 20;
    double dev_g = 0.0;
    double min_move_l = std::numeric_limits<double>::infinity();
    double min_move_t = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < count; ++c) {
        const std::uint64_t s = config.seed + 1000 * c + 7;
        const auto plain = random_pauli_rotation_ansatz(kQubits, kParams, s);
        const auto phased = with_phase(plain, kGaugeRate);
        const auto params = random_parameters(kParams, s + 1);
        OpCounter counter;
        const auto a = compute_geometric_tensor(plain, params, counter);
        const auto b = compute_geometric_tensor(phased, params, counter);
        dev_g = std::max(dev_g, max_abs_diff(a.matrix, b.matrix));
        min_move_l =
            std::min(min_move_l, max_abs_diff(a.li.to_matrix(), b.li.to_matrix()));
        double move_t = 0.0;
        for (std::size_t k = 0; k < kParams; ++k) {
            move_t = std::max(move_t, std::abs(a.berry[k] - b.berry[k]));
        }
        min_move_t = std::min(min_move_t, move_t);
    }
    std::ostringstream detail;
    detail << "min_dL=" << min_move_l << " min_dT=" << min_move_t;
    CheckResult r = finish("gauge_invariance", dev_g, tol, detail.str());
    r.passed = r.passed && min_move_l >= kGaugeMinMove && min_move_t >= kGaugeMinMove;
    return r;
}

CheckResult check_hermiticity(const std::vector<Case> &cases, double tol) {
    double dev = 0.0;
    for (const auto &c : cases) {
        OpCounter counter;
        const auto l = compute_full_li_matrix(c.circuit, c.params, counter);
        dev = std::max(dev, max_abs_diff(l, l.adjoint()));
    }
    return finish("naive_l_hermiticity", dev, tol);
}

double count_gap(std::uint64_t measured, std::uint64_t predicted) {
    return std::abs(static_cast<double>(measured) - static_cast<double>(predicted));
}

CheckResult check_counts(const VerifyConfig &config) {
    const std::size_t pmax = config.quick ? 12 : 50;
    double dev = 0.0;
    std::ostringstream detail;
    for (BaselineId id : all_baselines()) {
        double alg_dev = 0.0;
        for (std::size_t p = 1; p <= pmax; ++p) {
            const auto circuit = random_ansatz(kQubits, p, config.seed + p);
            const auto params = random_parameters(p, config.seed + p + 1);
            OpCounter counter;
            std::size_t registers = 0;
            {
                const AllocationProbe probe;
                (void)compute_li_tensor(id, circuit, params, counter);
                registers = probe.peak() - 1;
            }
            const CostEstimate model = cost_model(id, p);
            alg_dev = std::max({alg_dev, count_gap(counter.gate_applications, model.gates),
                                count_gap(counter.clones, model.clones),
                                count_gap(registers, model.registers)});
        }
        if (alg_dev > 0.0) {
            detail << baseline_name(id) << " off by up to " << alg_dev << "; ";
        }
        dev = std::max(dev, alg_dev);
    }
    for (std::size_t p = 1; p <= pmax; ++p) {
        const auto circuit = random_ansatz(kQubits, p, config.seed + p);
        const auto params = random_parameters(p, config.seed + p + 1);
        OpCounter counter;
        std::size_t registers = 0;
        {
            const AllocationProbe probe;
            (void)compute_geometric_tensor(circuit, params, counter, false);
            registers = probe.peak();
        }
        const PrimitiveCounts model = geometric_tensor_cost(p);
        const double main_dev =
            std::max({count_gap(counter.gate_applications, model.gates),
                      count_gap(counter.clones, model.clones),
                      count_gap(registers, kGeometricTensorRegisters)});
        if (main_dev > 0.0) {
            detail << "main off by up to " << main_dev << " at P=" << p << "; ";
        }
        dev = std::max(dev, main_dev);
    }
    return finish("operation_counts", dev, 0.0, detail.str());
}

} // namespace

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed; });
}

VerifyReport run_verify(const VerifyConfig &config) {
    const auto tol = [&config](double fallback) {
        return config.tolerance.value_or(fallback);
    };
    const auto cases = make_cases(config);
    VerifyReport report;
    report.checks.push_back(check_li_equivalence(cases, tol(kEquivalenceTol)));
    report.checks.push_back(check_g_against_naive(cases, tol(kEquivalenceTol)));
    report.checks.push_back(check_finite_difference(cases, tol(kFiniteDifferenceTol)));
    report.checks.push_back(check_diagonal_shortcut(cases, tol(kEquivalenceTol)));
    report.checks.push_back(check_hermiticity(cases, tol(kEquivalenceTol)));
    report.checks.push_back(check_gauge(config, tol(kGaugeTol)));
    report.checks.push_back(check_counts(config));
    return report;
}

void write_verify_report(std::ostream &out, const VerifyReport &report) {
    for (const auto &c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name
            << " max_deviation=" << c.max_deviation << " tol=" << c.tolerance;
        if (!c.detail.empty()) {
            out << " (" << c.detail << ')';
        }
        out << '\n';
    }
    out << (report.passed() ? "verify: all checks passed\n"
                            : "verify: FAILED\n");
}

} // namespace qng
