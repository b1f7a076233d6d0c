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
#include "qng/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "qng/error.hpp"
#include "qng/metric.hpp"

namespace qng {

namespace {

constexpr std::uint64_t kParamSeedSalt = 0x9e3779b97f4a7c15ULL;

BenchRow run_one(const AlgorithmChoice &alg, std::size_t p,
                 const BenchConfig &config) {
    BenchRow row;
    row.algorithm = std::string(algorithm_name(alg));
    row.p = p;
    if (alg) {
        const CostEstimate model = cost_model(*alg, p);
        row.predicted_gates = model.gates;
        row.predicted_clones = model.clones;
    } else {
        const PrimitiveCounts model = geometric_tensor_cost(p);
        row.predicted_gates = model.gates;
        row.predicted_clones = model.clones;
    }

    const AnsatzCircuit circuit =
        random_ansatz(config.num_qubits, p, config.seed + p);
    const ParameterVector params =
        random_parameters(p, (config.seed + p) ^ kParamSeedSalt);

    if (alg) {
        try {
            check_memory_budget(*alg, circuit, config.options);
        } catch (const ResourceError &) {
            row.skipped = true;
            return row;
        }
    }

    OpCounter counter;
    const auto start = std::chrono::steady_clock::now();
    {
        const AllocationProbe probe;
        if (alg) {
            (void)compute_li_tensor(*alg, circuit, params, counter, config.options);
        } else {
            (void)compute_geometric_tensor(circuit, params, counter, false);
        }
        // The input state is not a working register.
        row.registers_peak = probe.peak() == 0 ? 0 : probe.peak() - 1;
    }
    const auto stop = std::chrono::steady_clock::now();
    row.counts = counter;
    if (config.timing) {
        row.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return row;
}

template <class T> void put_number(std::ostream &out, T v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.write(buf.data(), end - buf.data());
}

} // namespace

std::string_view algorithm_name(const AlgorithmChoice &alg) noexcept {
    return alg ? baseline_name(*alg) : std::string_view("main");
}

std::optional<AlgorithmChoice> parse_algorithm(std::string_view name) {
    if (name == "main") {
        return AlgorithmChoice{};
    }
    if (auto id = parse_baseline(name)) {
        return AlgorithmChoice{*id};
    }
    return std::nullopt;
}

std::vector<std::size_t> make_sweep(std::size_t pmin, std::size_t pmax,
                                    std::size_t pstep) {
    if (pmin == 0 || pstep == 0 || pmax < pmin) {
        throw DomainError("sweep needs 1 <= pmin <= pmax and pstep >= 1");
    }
    std::vector<std::size_t> out;
    for (std::size_t p = pmin; p <= pmax; p += pstep) {
        out.push_back(p);
    }
    return out;
}

std::vector<BenchRow> run_bench(const BenchConfig &config) {
    if (config.num_qubits == 0 || config.num_qubits > Statevector::kMaxQubits) {
        throw DomainError("bench qubit count out of range");
    }
    struct Task {
        AlgorithmChoice alg;
        std::size_t p;
    };
    std::vector<Task> tasks;
    for (const auto &alg : config.algorithms) {
        for (std::size_t p : config.parameter_counts) {
            tasks.push_back({alg, p});
        }
    }
    std::vector<BenchRow> rows(tasks.size());
    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    if (jobs == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            rows[t] = run_one(tasks[t].alg, tasks[t].p, config);
        }
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            try {
                rows[t] = run_one(tasks[t].alg, tasks[t].p, config);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(jobs, tasks.size()); ++w) {
        pool.emplace_back(worker);
    }
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows) {
    out << "alg,P,gates,clones,inner_products,registers_peak,predicted_gates,"
           "predicted_clones,wall_ms,status\n";
    for (const auto &row : rows) {
        out << row.algorithm << ',' << row.p << ',';
        if (row.skipped) {
            out << ",,,,";
        } else {
            out << row.counts.gate_applications << ',' << row.counts.clones << ','
                << row.counts.inner_products << ',' << row.registers_peak << ',';
        }
        out << row.predicted_gates << ',' << row.predicted_clones << ',';
        if (row.wall_ms) {
            put_number(out, *row.wall_ms);
        }
        out << ',' << (row.skipped ? "skipped" : "ok") << '\n';
    }
}

} // namespace qng
