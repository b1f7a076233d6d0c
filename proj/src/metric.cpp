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
#include "qng/metric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "qng/error.hpp"

namespace qng {

LiTensor::LiTensor(std::size_t num_parameters)
    : p_(num_parameters), upper_(num_parameters * (num_parameters + 1) / 2) {}

std::size_t LiTensor::packed_index(std::size_t i, std::size_t j) const {
    if (i >= p_ || j >= p_) {
        throw DomainError("L index (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") out of range");
    }
    return j * (j + 1) / 2 + i;
}

complex_t LiTensor::operator()(std::size_t i, std::size_t j) const {
    return i <= j ? upper_[packed_index(i, j)]
                  : std::conj(upper_[packed_index(j, i)]);
}

void LiTensor::set(std::size_t i, std::size_t j, complex_t value) {
    if (i > j) {
        throw DomainError("LiTensor stores only i <= j");
    }
    upper_[packed_index(i, j)] = value;
}

Eigen::MatrixXcd LiTensor::to_matrix() const {
    const auto n = static_cast<Eigen::Index>(p_);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < p_; ++i) {
        for (std::size_t j = 0; j < p_; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                (*this)(i, j);
        }
    }
    return m;
}

Eigen::MatrixXcd assemble_geometric_tensor(const LiTensor &li,
                                           const BerryVector &berry) {
    return assemble_geometric_tensor(li.to_matrix(), berry);
}

Eigen::MatrixXcd assemble_geometric_tensor(const Eigen::MatrixXcd &li,
                                           const BerryVector &berry) {
    const auto n = li.rows();
    if (li.cols() != n || static_cast<std::size_t>(n) != berry.size()) {
        throw DomainError("L and T sizes disagree");
    }
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = li(i, j) - std::conj(berry[static_cast<std::size_t>(i)]) *
                                     berry[static_cast<std::size_t>(j)];
        }
    }
    return g;
}

GeometricTensor compute_geometric_tensor(const AnsatzCircuit &circuit,
                                         const ParameterVector &params,
                                         OpCounter &counter,
                                         bool use_diagonal_shortcut,
                                         Statevector *ansatz_state) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const std::size_t n = circuit.num_qubits();

    const Statevector in = circuit.make_input_state();
    Statevector chi(n);
    Statevector psi(n);
    Statevector phi(n);
    Statevector lambda(n);
    Statevector mu(n);

    LiTensor li(p);
    BerryVector berry{std::vector<complex_t>(p)};

    auto diagonal = [&](std::size_t j, const Statevector &pre) -> complex_t {
        if (use_diagonal_shortcut) {
            if (auto v = diagonal_value(circuit.gate(j), params[j], &pre)) {
                return *v;
            }
        }
        return inner_product(phi, phi, counter);
    };

    // First gate. chi keeps U_1|in> for the rest of the computation.
    clone_into(in, chi, counter);
    apply_operator(chi, ops.unitary(0), counter);
    clone_into(chi, psi, counter);
    clone_into(in, phi, counter);
    apply_operator(phi, ops.derivative(0), counter);
    berry.entries[0] = inner_product(chi, phi, counter);
    li.set(0, 0, diagonal(0, in));

    for (std::size_t j = 1; j < p; ++j) {
        // psi = U_{j-1}..U_1|in>
        clone_into(psi, lambda, counter);
        clone_into(psi, phi, counter);
        apply_operator(phi, ops.derivative(j), counter);
        li.set(j, j, diagonal(j, psi));

        for (std::size_t i = j; i-- > 0;) {
            apply_operator(phi, ops.unitary_adjoint(i + 1), counter);
            apply_operator(lambda, ops.unitary_adjoint(i), counter);
            clone_into(lambda, mu, counter);
            apply_operator(mu, ops.derivative(i), counter);
            li.set(i, j, inner_product(mu, phi, counter));
        }

        // phi = U_1^dag .. U_j^dag dU_j |psi>_{j-1}
        berry.entries[j] = inner_product(chi, phi, counter);
        apply_operator(psi, ops.unitary(j), counter);
    }

    Eigen::MatrixXcd g = assemble_geometric_tensor(li, berry);
    if (ansatz_state != nullptr) {
        *ansatz_state = std::move(psi);
    }
    return {std::move(g), std::move(berry), std::move(li)};
}

BerryVector compute_berry_vector(const AnsatzCircuit &circuit,
                                 const ParameterVector &params,
                                 OpCounter &counter) {
    const BoundAnsatz ops(circuit, params);
    const std::size_t p = circuit.num_parameters();
    const Statevector in = circuit.make_input_state();
    Statevector psi(circuit.num_qubits());
    Statevector phi(circuit.num_qubits());

    BerryVector berry{std::vector<complex_t>(p)};
    clone_into(in, psi, counter);
    for (std::size_t i = 0; i < p; ++i) {
        clone_into(psi, phi, counter);
        apply_operator(phi, ops.derivative(i), counter);
        apply_operator(psi, ops.unitary(i), counter);
        // <psi_i| dU_i |psi_{i-1}>
        berry.entries[i] = inner_product(psi, phi, counter);
    }
    return berry;
}

PrimitiveCounts geometric_tensor_cost(std::uint64_t p) {
    return {(3 * p * p + p) / 2, (p * p + 3 * p + 2) / 2};
}

namespace {

void append_double(std::string &line, double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    line.append(buf.data(), end);
}

template <typename T> void write_le(std::ostream &out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(bytes.data(), bytes.size());
}

template <typename T> T read_le(std::istream &in) {
    std::array<char, sizeof(T)> bytes{};
    if (!in.read(bytes.data(), bytes.size())) {
        throw DomainError("truncated tensor dump");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

constexpr std::array<char, 4> kTensorMagic = {'Q', 'G', 'T', '1'};

} // namespace

void write_tensor_csv(std::ostream &out, const Eigen::MatrixXcd &matrix) {
    out << "i,j,re,im\n";
    std::string line;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            line.clear();
            line += std::to_string(i);
            line += ',';
            line += std::to_string(j);
            line += ',';
            append_double(line, matrix(i, j).real());
            line += ',';
            append_double(line, matrix(i, j).imag());
            line += '\n';
            out << line;
        }
    }
}

void write_tensor_binary(std::ostream &out, const Eigen::MatrixXcd &matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw DomainError("tensor dump needs a square matrix");
    }
    out.write(kTensorMagic.data(), kTensorMagic.size());
    write_le<std::uint64_t>(out, static_cast<std::uint64_t>(matrix.rows()));
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            write_le<double>(out, matrix(i, j).real());
            write_le<double>(out, matrix(i, j).imag());
        }
    }
}

// Guards the allocation below against corrupt headers.
constexpr std::uint64_t kMaxDumpParameters = std::uint64_t{1} << 20;

Eigen::MatrixXcd read_tensor_binary(std::istream &in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kTensorMagic) {
        throw DomainError("not a tensor dump (bad magic)");
    }
    const auto p = read_le<std::uint64_t>(in);
    if (p > kMaxDumpParameters) {
        throw DomainError("tensor dump claims P = " + std::to_string(p));
    }
    const auto n = static_cast<Eigen::Index>(p);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = read_le<double>(in);
            const double im = read_le<double>(in);
            m(i, j) = {re, im};
        }
    }
    return m;
}

} // namespace qng
