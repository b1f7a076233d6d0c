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
// Reference implementations for tests. Everything here works with dense
// 2^N x 2^N matrices built from Kronecker products and a Taylor matrix
// exponential, so it shares no code path with the library kernels. It reads
// gate descriptions from library types but never calls apply_operator,
// gate_unitary or gate_derivative.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qng/ansatz.hpp"
#include "qng/baselines.hpp"
#include "qng/optimizer.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Eigen::Matrix2cd pauli_2x2(qng::Pauli p) {
    const cplx i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (p) {
    case qng::Pauli::X:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case qng::Pauli::Y:
        m << 0.0, -i, i, 0.0;
        break;
    case qng::Pauli::Z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

// Qubit 0 is the least-significant bit, so it is the rightmost factor.
inline Mat local_product(const std::vector<Eigen::Matrix2cd> &per_qubit) {
    Mat out = Mat::Identity(1, 1);
    for (std::size_t q = per_qubit.size(); q-- > 0;) {
        out = kron(out, per_qubit[q]);
    }
    return out;
}

inline Mat pauli_full(const qng::PauliString &p, std::size_t n) {
    std::vector<Eigen::Matrix2cd> ops(n, Eigen::Matrix2cd::Identity());
    for (const auto &f : p.factors()) {
        ops[f.qubit] = pauli_2x2(f.label);
    }
    return local_product(ops);
}

inline Mat projector_full(std::size_t qubit, int value, std::size_t n) {
    std::vector<Eigen::Matrix2cd> ops(n, Eigen::Matrix2cd::Identity());
    ops[qubit] = Eigen::Matrix2cd::Zero();
    ops[qubit](value, value) = 1.0;
    return local_product(ops);
}

// Scaling and squaring with a long Taylor series.
inline Mat expm(const Mat &a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::ldexp(1.0, squarings) > 0.25) {
        ++squarings;
    }
    const Mat scaled = a / std::ldexp(1.0, squarings);
    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

inline Mat gate_matrix(const qng::ParameterizedGate &gate, double theta,
                       std::size_t n) {
    const cplx i{0.0, 1.0};
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    if (const auto *g = std::get_if<qng::PauliRotation>(&gate.kind())) {
        return expm(i * g->scale * theta * pauli_full(g->axis, n));
    }
    if (const auto *g = std::get_if<qng::ControlledPauliRotation>(&gate.kind())) {
        const Mat rot = expm(i * g->scale * theta * pauli_full(g->axis, n));
        return projector_full(g->control, 0, n) + projector_full(g->control, 1, n) * rot;
    }
    if (const auto *g = std::get_if<qng::PhasedPauliRotation>(&gate.kind())) {
        return std::exp(i * g->phase_rate * theta) *
               expm(i * g->scale * theta * pauli_full(g->axis, n));
    }
    const auto &gen = std::get<qng::GeneralGenerated>(gate.kind()).generator;
    Mat h = Mat::Zero(dim, dim);
    for (const auto &term : gen.terms()) {
        h += term.coefficient.value(theta) * pauli_full(term.pauli, n);
    }
    return expm(i * h);
}

// Central difference of the dense gate matrix.
inline Mat gate_matrix_derivative(const qng::ParameterizedGate &gate,
                                  double theta, std::size_t n, double h) {
    return (gate_matrix(gate, theta + h, n) - gate_matrix(gate, theta - h, n)) /
           (2.0 * h);
}

inline Vec basis(std::size_t n, std::uint64_t index) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

inline Vec state(const qng::AnsatzCircuit &c, const std::vector<double> &theta) {
    Vec v = basis(c.num_qubits(), c.input_index());
    for (std::size_t k = 0; k < c.num_parameters(); ++k) {
        v = gate_matrix(c.gate(k), theta[k], c.num_qubits()) * v;
    }
    return v;
}

inline Vec to_vec(const qng::Statevector &s) {
    Vec v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = s[k];
    }
    return v;
}

inline qng::Statevector from_vec(std::size_t n, const Vec &v) {
    return qng::Statevector(n, std::vector<cplx>(v.data(), v.data() + v.size()));
}

struct TensorParts {
    Mat g;
    Mat l;
    Vec t;
};

// G_ij = <d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>, derivatives by
// central differences of the dense state.
inline TensorParts finite_difference_tensor(const qng::AnsatzCircuit &c,
                                            const std::vector<double> &theta,
                                            double h = 1e-5) {
    const std::size_t p = c.num_parameters();
    const Vec psi = state(c, theta);
    std::vector<Vec> d;
    for (std::size_t k = 0; k < p; ++k) {
        auto up = theta;
        auto down = theta;
        up[k] += h;
        down[k] -= h;
        d.push_back((state(c, up) - state(c, down)) / (2.0 * h));
    }
    const auto pp = static_cast<Eigen::Index>(p);
    TensorParts out{Mat(pp, pp), Mat(pp, pp), Vec(pp)};
    for (Eigen::Index j = 0; j < pp; ++j) {
        out.t(j) = psi.dot(d[static_cast<std::size_t>(j)]);
    }
    for (Eigen::Index i = 0; i < pp; ++i) {
        for (Eigen::Index j = 0; j < pp; ++j) {
            out.l(i, j) = d[static_cast<std::size_t>(i)].dot(d[static_cast<std::size_t>(j)]);
            out.g(i, j) = out.l(i, j) - std::conj(out.t(i)) * out.t(j);
        }
    }
    return out;
}

inline Mat hamiltonian_matrix(const qng::PauliSumHamiltonian &h, std::size_t n) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Mat m = Mat::Zero(dim, dim);
    for (const auto &term : h.terms()) {
        m += term.coefficient * pauli_full(term.pauli, n);
    }
    return m;
}

inline double ground_energy(const qng::PauliSumHamiltonian &h, std::size_t n) {
    const Eigen::SelfAdjointEigenSolver<Mat> es(hamiltonian_matrix(h, n));
    return es.eigenvalues().minCoeff();
}

inline double energy(const qng::AnsatzCircuit &c, const std::vector<double> &theta,
                     const qng::PauliSumHamiltonian &h) {
    const Vec psi = state(c, theta);
    return psi.dot(hamiltonian_matrix(h, c.num_qubits()) * psi).real();
}

struct CountRow {
    std::uint64_t gates;
    std::uint64_t clones;
    std::uint64_t registers;
};

// Closed-form counts as published, evaluated in long double from its fractional
// coefficients; rounding must be exact.
inline CountRow count_formula(qng::BaselineId id, std::uint64_t p) {
    const long double x = static_cast<long double>(p);
    long double g = 0;
    long double c = 0;
    long double r = 0;
    switch (id) {
    case qng::BaselineId::Alg2:
        g = 2 * x * x * x, c = 2 * x * x, r = 2;
        break;
    case qng::BaselineId::Alg3:
        g = 2.0L / 3 * x * x * x + x * x + x / 3, c = x * x / 2 + x / 2, r = 1;
        break;
    case qng::BaselineId::Alg4:
        g = x * x * x / 3 + x * x / 2 + 13.0L / 6 * x, c = x * x / 2 + 1.5L * x + 1,
        r = 3;
        break;
    case qng::BaselineId::Alg5:
        g = x * x * x / 6 + x * x + 11.0L / 6 * x, c = x * x / 2 + 1.5L * x + 1, r = 3;
        break;
    case qng::BaselineId::Alg6:
        g = 1.5L * x * x + 1.5L * x, c = x * x / 2 + 2.5L * x + 1, r = 4;
        break;
    case qng::BaselineId::Alg7:
        g = x * x + x, c = x, r = x;
        break;
    case qng::BaselineId::Alg8:
        g = x * x / 2 + 1.5L * x, c = x + 1, r = x + 1;
        break;
    }
    return {static_cast<std::uint64_t>(std::llround(g)),
            static_cast<std::uint64_t>(std::llround(c)),
            static_cast<std::uint64_t>(std::llround(r))};
}

} // namespace oracle
