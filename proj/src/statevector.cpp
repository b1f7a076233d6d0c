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
#include "qng/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <string>
#include <type_traits>
#include <variant>

#include "qng/error.hpp"

namespace qng {

namespace {

thread_local std::size_t live_count = 0;
thread_local std::size_t peak_count = 0;

void note_construction() noexcept {
    ++live_count;
    peak_count = std::max(peak_count, live_count);
}

std::vector<complex_t> allocate(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > Statevector::kMaxQubits) {
        throw DomainError("statevector needs 1.." +
                          std::to_string(Statevector::kMaxQubits) +
                          " qubits, got " + std::to_string(num_qubits));
    }
    try {
        return std::vector<complex_t>(std::size_t{1} << num_qubits);
    } catch (const std::bad_alloc &) {
        throw ResourceError("cannot allocate a " + std::to_string(num_qubits) +
                            "-qubit statevector");
    }
}

void require_same_width(const Statevector &a, const Statevector &b,
                        const char *what) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError(std::string(what) + ": qubit counts differ (" +
                          std::to_string(a.num_qubits()) + " vs " +
                          std::to_string(b.num_qubits()) + ")");
    }
}

inline bool odd_parity(std::uint64_t x) noexcept {
    return (std::popcount(x) & 1) != 0;
}

void apply_pauli_operator(std::span<complex_t> amps, const PauliOperator &op) {
    const std::uint64_t flip = op.pauli.flip_mask();
    const std::uint64_t phase = op.pauli.phase_mask();
    // i^{#Y}
    static constexpr complex_t kIPowers[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const complex_t b = op.pauli_coeff * kIPowers[op.pauli.num_y() % 4];
    const complex_t a = op.identity_coeff;
    const complex_t off = op.control_off_coeff;
    const std::uint64_t ctrl =
        op.control ? (std::uint64_t{1} << *op.control) : 0;
    const bool scale_off = off != complex_t{1.0, 0.0};
    const std::uint64_t dim = amps.size();

    if (flip == 0) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            if (ctrl != 0 && (k & ctrl) == 0) {
                if (scale_off) {
                    amps[k] *= off;
                }
                continue;
            }
            amps[k] *= odd_parity(k & phase) ? a - b : a + b;
        }
        return;
    }

    for (std::uint64_t k = 0; k < dim; ++k) {
        const std::uint64_t m = k ^ flip;
        if (m < k) {
            continue;
        }
        if (ctrl != 0 && (k & ctrl) == 0) {
            if (scale_off) {
                amps[k] *= off;
                amps[m] *= off;
            }
            continue;
        }
        const complex_t vk = amps[k];
        const complex_t vm = amps[m];
        const complex_t bm = odd_parity(m & phase) ? -b : b;
        const complex_t bk = odd_parity(k & phase) ? -b : b;
        amps[k] = a * vk + bm * vm;
        amps[m] = a * vm + bk * vk;
    }
}

void apply_dense_operator(std::span<complex_t> amps, const DenseOperator &op) {
    const std::size_t width = op.targets.size();
    const std::size_t dim = std::size_t{1} << width;
    std::uint64_t target_mask = 0;
    for (auto t : op.targets) {
        target_mask |= std::uint64_t{1} << t;
    }
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t b = 0; b < width; ++b) {
            if ((r >> b) & 1U) {
                offsets[r] |= std::uint64_t{1} << op.targets[b];
            }
        }
    }
    std::vector<complex_t> in(dim);
    const std::uint64_t total = amps.size();
    for (std::uint64_t base = 0; base < total; ++base) {
        if ((base & target_mask) != 0) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            in[c] = amps[base | offsets[c]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            complex_t acc{0.0, 0.0};
            const complex_t *row = &op.matrix[r * dim];
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * in[c];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

} // namespace

Statevector::Statevector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amps_(allocate(num_qubits)) {
    note_construction();
}

Statevector::Statevector(std::size_t num_qubits,
                         std::vector<complex_t> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits == 0 || num_qubits > kMaxQubits ||
        amps_.size() != (std::size_t{1} << num_qubits)) {
        throw DomainError("amplitude vector of length " +
                          std::to_string(amps_.size()) +
                          " does not describe " + std::to_string(num_qubits) +
                          " qubits");
    }
    note_construction();
}

Statevector::Statevector(const Statevector &other)
    : num_qubits_(other.num_qubits_), amps_(other.amps_) {
    note_construction();
}

Statevector::Statevector(Statevector &&other) noexcept
    : num_qubits_(other.num_qubits_), amps_(std::move(other.amps_)) {
    note_construction();
}

Statevector &Statevector::operator=(const Statevector &other) = default;
Statevector &Statevector::operator=(Statevector &&other) noexcept = default;

Statevector::~Statevector() { --live_count; }

double Statevector::norm() const noexcept {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Statevector make_basis_state(std::size_t num_qubits,
                             std::uint64_t basis_index) {
    if (num_qubits == 0 || num_qubits > Statevector::kMaxQubits ||
        basis_index >= (std::uint64_t{1} << num_qubits)) {
        throw DomainError("basis index " + std::to_string(basis_index) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    Statevector state(num_qubits);
    state.amplitudes()[basis_index] = 1.0;
    return state;
}

void clone_into(const Statevector &src, Statevector &dst, OpCounter &counter) {
    require_same_width(src, dst, "clone_into");
    if (&src != &dst) {
        std::copy(src.amplitudes().begin(), src.amplitudes().end(),
                  dst.amplitudes().begin());
    }
    ++counter.clones;
}

complex_t inner_product(const Statevector &bra, const Statevector &ket,
                        OpCounter &counter) {
    require_same_width(bra, ket, "inner_product");
    const auto a = bra.amplitudes();
    const auto b = ket.amplitudes();
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        // conj(a) * b
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    ++counter.inner_products;
    return {re, im};
}

void apply_operator(Statevector &state, const GateOperator &op,
                    OpCounter &counter) {
    validate_qubits(op.qubits(), state.num_qubits());
    std::visit(
        [&](const auto &form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, PauliOperator>) {
                apply_pauli_operator(state.amplitudes(), form);
            } else {
                apply_dense_operator(state.amplitudes(), form);
            }
        },
        op.form());
    ++counter.gate_applications;
}

double probability_of_one(const Statevector &state, std::size_t qubit) {
    validate_qubits({qubit}, state.num_qubits());
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & bit) != 0) {
            p += std::norm(amps[k]);
        }
    }
    return p;
}

void validate_qubits(const std::vector<std::size_t> &qubits,
                     std::size_t num_qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= num_qubits) {
            throw DomainError("qubit index " + std::to_string(qubits[i]) +
                              " out of range for " +
                              std::to_string(num_qubits) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[j] == qubits[i]) {
                throw DomainError("qubit " + std::to_string(qubits[i]) +
                                  " used twice by one operator");
            }
        }
    }
}

AllocationProbe::AllocationProbe() noexcept
    : baseline_(live_count), saved_peak_(peak_count) {
    peak_count = live_count;
}

AllocationProbe::~AllocationProbe() {
    peak_count = std::max(saved_peak_, peak_count);
}

std::size_t AllocationProbe::peak() const noexcept {
    return peak_count - baseline_;
}

std::size_t AllocationProbe::live() const noexcept {
    return live_count - baseline_;
}

} // namespace qng
