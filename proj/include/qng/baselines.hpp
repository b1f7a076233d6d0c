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
 * Reference algorithms for the Li tensor L_{i<=j}, from the naive O(P^3)
 * evaluation down to rolling-cache variants, together with their closed-form
 * operation counts.
 *
 * Each algorithm follows its listing's loop bounds, iteration direction and
 * clone points so that the instrumented counts are auditable line by line.
 * None of them uses the diagonal shortcut.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "qng/ansatz.hpp"
#include "qng/metric.hpp"
#include "qng/statevector.hpp"

namespace qng {

enum class BaselineId {
    /// Every (i, j) pair, both derivative states rebuilt from |in>.
    Alg2,
    /// Upper triangle only, gates after j eliminated.
    Alg3,
    /// + rolling suffix.
    Alg4,
    /// + rolling infix (descending i).
    Alg5,
    /// + rolling prefix. O(P^2) gates with four registers.
    Alg6,
    /// P stored derivative states, each built from |in>.
    Alg7,
    /// P stored derivative states on a rolling suffix.
    Alg8,
};

[[nodiscard]] std::span<const BaselineId> all_baselines() noexcept;
[[nodiscard]] std::string_view baseline_name(BaselineId id) noexcept;
[[nodiscard]] std::optional<BaselineId> parse_baseline(std::string_view name);

struct CostEstimate {
    std::uint64_t gates;
    std::uint64_t clones;
    std::uint64_t registers;

    [[nodiscard]] std::uint64_t total() const noexcept { return gates + clones; }
};

/**
 * @brief Closed-form operation counts for P parameters.
 *
 * | alg | gates                  | clones           | registers |
 * |-----|------------------------|------------------|-----------|
 * | 2   | 2P^3                   | 2P^2             | 2         |
 * | 3   | 2/3 P^3 + P^2 + 1/3 P  | 1/2 P^2 + 1/2 P  | 1         |
 * | 4   | 1/3 P^3 + 1/2 P^2 + 13/6 P | 1/2 P^2 + 3/2 P + 1 | 3   |
 * | 5   | 1/6 P^3 + P^2 + 11/6 P | 1/2 P^2 + 3/2 P + 1 | 3      |
 * | 6   | 3/2 P^2 + 3/2 P        | 1/2 P^2 + 5/2 P + 1 | 4      |
 * | 7   | P^2 + P                | P                | P         |
 * | 8   | 1/2 P^2 + 3/2 P        | P + 1            | P + 1     |
 *
 * Registers exclude the input state |in>.
 */
[[nodiscard]] CostEstimate cost_model(BaselineId id, std::uint64_t p);

/// Inner products performed: P^2 for Alg2, (P^2 + P)/2 otherwise.
[[nodiscard]] std::uint64_t inner_product_count(BaselineId id, std::uint64_t p);

struct BaselineOptions {
    /// Alg7/Alg8 refuse to run when (P + 1) 2^N complex doubles exceed this.
    std::uint64_t memory_budget_bytes = std::uint64_t{4} << 30;
};

/// Reads QNG_MEMORY_BUDGET_BYTES; falls back to the 4 GiB default.
[[nodiscard]] BaselineOptions baseline_options_from_env();

/// Throws ResourceError if `id` stores P states that do not fit the budget.
void check_memory_budget(BaselineId id, const AnsatzCircuit &circuit,
                         const BaselineOptions &options);

[[nodiscard]] LiTensor compute_li_tensor(BaselineId id,
                                         const AnsatzCircuit &circuit,
                                         const ParameterVector &params,
                                         OpCounter &counter,
                                         const BaselineOptions &options = {});

/// Alg2's full P x P result with both triangles evaluated independently.
[[nodiscard]] Eigen::MatrixXcd
compute_full_li_matrix(const AnsatzCircuit &circuit,
                       const ParameterVector &params, OpCounter &counter);

} // namespace qng
