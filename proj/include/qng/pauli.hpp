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
 * Pauli strings: tensor products of X, Y and Z on distinct qubits.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qng {

enum class Pauli : std::uint8_t { X, Y, Z };

struct PauliFactor {
    std::size_t qubit;
    Pauli label;

    bool operator==(const PauliFactor &) const = default;
};

/**
 * @brief Hermitian, self-inverse product of single-qubit Paulis.
 *
 * Factors are kept sorted by qubit. The empty string is the identity.
 * Qubit indices are limited to 63 because the action on a basis index is
 * encoded in two bit masks:
 *
 *     sigma |k> = i^{#Y} (-1)^{popcount(k & phase_mask)} |k ^ flip_mask>
 *
 * with flip_mask = X|Y qubits and phase_mask = Y|Z qubits.
 */
class PauliString {
  public:
    static constexpr std::size_t kMaxQubit = 63;

    PauliString() = default;
    explicit PauliString(std::vector<PauliFactor> factors);

    /// Parses whitespace-separated factors such as "X0 Y3 Z1". "I" or an
    /// empty string yield the identity.
    static PauliString parse(std::string_view word);

    [[nodiscard]] const std::vector<PauliFactor> &factors() const noexcept {
        return factors_;
    }
    [[nodiscard]] bool is_identity() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::size_t weight() const noexcept { return factors_.size(); }
    [[nodiscard]] std::vector<std::size_t> qubits() const;
    [[nodiscard]] bool acts_on(std::size_t qubit) const noexcept;

    [[nodiscard]] std::uint64_t flip_mask() const noexcept { return flip_; }
    [[nodiscard]] std::uint64_t phase_mask() const noexcept { return phase_; }
    [[nodiscard]] std::size_t num_y() const noexcept { return num_y_; }

    /// "X0 Y3"; "I" for the identity.
    [[nodiscard]] std::string to_string() const;

    bool operator==(const PauliString &other) const {
        return factors_ == other.factors_;
    }

  private:
    std::vector<PauliFactor> factors_;
    std::uint64_t flip_ = 0;
    std::uint64_t phase_ = 0;
    std::size_t num_y_ = 0;
};

[[nodiscard]] char pauli_symbol(Pauli p) noexcept;

} // namespace qng
