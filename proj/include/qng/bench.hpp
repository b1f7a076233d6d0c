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
 * Instrumented sweeps of the tensor algorithms over the parameter count.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qng/baselines.hpp"

namespace qng {

/// nullopt selects the main O(P^2) algorithm.
using AlgorithmChoice = std::optional<BaselineId>;

[[nodiscard]] std::string_view algorithm_name(const AlgorithmChoice &alg) noexcept;

/// Accepts "main", "alg2".."alg8".
[[nodiscard]] std::optional<AlgorithmChoice> parse_algorithm(std::string_view name);

struct BenchConfig {
    std::vector<AlgorithmChoice> algorithms;
    std::vector<std::size_t> parameter_counts;
    std::size_t num_qubits = 4;
    std::uint64_t seed = 7;
    bool timing = false;
    std::size_t jobs = 1;
    BaselineOptions options;
};

struct BenchRow {
    std::string algorithm;
    std::size_t p = 0;
    bool skipped = false;
    OpCounter counts;
    std::size_t registers_peak = 0;
    std::uint64_t predicted_gates = 0;
    std::uint64_t predicted_clones = 0;
    std::optional<double> wall_ms;
};

/// pmin, pmin + pstep, ... up to pmax inclusive.
[[nodiscard]] std::vector<std::size_t> make_sweep(std::size_t pmin,
                                                  std::size_t pmax,
                                                  std::size_t pstep);

/**
 * @brief Runs every (algorithm, P) pair.
 *
 * All algorithms at a given P share one seeded circuit and parameter set.
 * Rows come back ordered by algorithm (config order) then P, whatever
 * `jobs` is. Pairs that exceed the memory budget yield skipped rows.
 */
[[nodiscard]] std::vector<BenchRow> run_bench(const BenchConfig &config);

/**
 * @brief CSV with header
 * `alg,P,gates,clones,inner_products,registers_peak,predicted_gates,predicted_clones,wall_ms,status`.
 *
 * wall_ms is empty unless timing was requested; status is "ok" or
 * "skipped" (with the measured columns empty).
 */
void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows);

} // namespace qng
