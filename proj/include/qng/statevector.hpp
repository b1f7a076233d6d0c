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
 * Dense statevector storage and the three simulation primitives: clone,
 * apply operator, inner product. Every primitive call is tallied in an
 * OpCounter.
 *
 * Amplitude order is little-endian: qubit 0 is the least-significant bit of
 * the basis index.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qng/operator.hpp"

namespace qng {

/// Tally of primitive operations. Only ever incremented by the primitives.
struct OpCounter {
    std::uint64_t gate_applications = 0;
    std::uint64_t clones = 0;
    std::uint64_t inner_products = 0;

    void reset() noexcept { *this = OpCounter{}; }
    [[nodiscard]] std::uint64_t gates_plus_clones() const noexcept {
        return gate_applications + clones;
    }

    bool operator==(const OpCounter &) const = default;
};

/**
 * @brief Dense vector of 2^N complex amplitudes.
 *
 * Normalization is not enforced: derivative images are generally not unit
 * vectors. Every live instance is tracked per thread so algorithms can be
 * audited for the number of registers they hold (see AllocationProbe).
 */
class Statevector {
  public:
    /// Largest register the type will attempt to allocate.
    static constexpr std::size_t kMaxQubits = 48;

    /// All-zero register.
    explicit Statevector(std::size_t num_qubits);
    Statevector(std::size_t num_qubits, std::vector<complex_t> amplitudes);

    Statevector(const Statevector &other);
    Statevector(Statevector &&other) noexcept;
    Statevector &operator=(const Statevector &other);
    Statevector &operator=(Statevector &&other) noexcept;
    ~Statevector();

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<complex_t> amplitudes() noexcept { return amps_; }
    [[nodiscard]] complex_t operator[](std::size_t k) const { return amps_[k]; }

    [[nodiscard]] double norm() const noexcept;

  private:
    std::size_t num_qubits_;
    std::vector<complex_t> amps_;
};

/// |basis_index>, little-endian. Throws DomainError if out of range.
[[nodiscard]] Statevector make_basis_state(std::size_t num_qubits,
                                           std::uint64_t basis_index);

/// dst := src. Counts one clone.
void clone_into(const Statevector &src, Statevector &dst, OpCounter &counter);

/// <bra|ket>. Counts one inner product.
[[nodiscard]] complex_t inner_product(const Statevector &bra,
                                      const Statevector &ket,
                                      OpCounter &counter);

/// state <- op state, in place. Counts one gate application. The operator
/// need not be unitary.
void apply_operator(Statevector &state, const GateOperator &op,
                    OpCounter &counter);

/// Probability that `qubit` reads 1. Not a primitive; not counted.
[[nodiscard]] double probability_of_one(const Statevector &state,
                                        std::size_t qubit);

/// Checks every index is < num_qubits and pairwise distinct.
void validate_qubits(const std::vector<std::size_t> &qubits,
                     std::size_t num_qubits);

/**
 * @brief Scoped high-water mark of live Statevector objects on this thread.
 *
 * `peak()` is the largest number of statevectors alive at once since the
 * probe was created, minus those already alive at that moment.
 */
class AllocationProbe {
  public:
    AllocationProbe() noexcept;
    ~AllocationProbe();
    AllocationProbe(const AllocationProbe &) = delete;
    AllocationProbe &operator=(const AllocationProbe &) = delete;

    [[nodiscard]] std::size_t peak() const noexcept;
    [[nodiscard]] std::size_t live() const noexcept;

  private:
    std::size_t baseline_;
    std::size_t saved_peak_;
};

} // namespace qng
