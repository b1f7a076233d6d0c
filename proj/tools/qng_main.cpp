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
// qng: command-line front end for tensor evaluation, cost sweeps,
// natural-gradient optimization and self verification.
//
// Exit codes: 0 success, 1 verification or numerical failure,
// 2 usage or parse error, 3 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qng/baselines.hpp"
#include "qng/bench.hpp"
#include "qng/error.hpp"
#include "qng/io.hpp"
#include "qng/metric.hpp"
#include "qng/optimizer.hpp"
#include "qng/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct TensorArgs {
    std::string circuit;
    std::string params;
    std::string algorithm = "main";
    bool no_shortcut = false;
    std::string out;
    std::string binary_out;
    std::size_t max_qubits = 28;
    std::optional<std::uint64_t> budget;
};

struct BenchArgs {
    std::string algorithms = "alg2..alg8,main";
    std::size_t pmin = 1;
    std::size_t pmax = 50;
    std::size_t pstep = 1;
    std::size_t qubits = 4;
    std::uint64_t seed = 7;
    bool timing = false;
    std::size_t jobs = 1;
    std::string out;
    std::optional<std::uint64_t> budget;
};

struct OptimizeArgs {
    std::string circuit;
    std::string hamiltonian;
    std::string params;
    std::uint64_t seed = 1;
    double dt = 0.05;
    double lambda = 1e-8;
    std::size_t steps = 500;
    double tol = 1e-6;
    std::string mode = "natural";
    bool no_shortcut = false;
    std::string out;
};

struct VerifyArgs {
    bool quick = false;
    std::uint64_t seed = 2021;
    std::optional<double> tol;
};

// Writes through `path`, or to stdout when it is empty.
class Output {
  public:
    explicit Output(const std::string &path, bool binary = false) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(
                path, binary ? std::ios::binary : std::ios::out);
            if (!*file_) {
                throw qng::ResourceError("cannot open " + path + " for writing");
            }
        }
    }
    std::ostream &stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<qng::AlgorithmChoice> parse_algorithm_list(const std::string &text) {
    std::vector<qng::AlgorithmChoice> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const auto lo = qng::parse_baseline(item.substr(0, dots));
            const auto hi = qng::parse_baseline(item.substr(dots + 2));
            if (!lo || !hi || *hi < *lo) {
                throw qng::DomainError("bad algorithm range \"" + item + "\"");
            }
            for (auto id : qng::all_baselines()) {
                if (*lo <= id && id <= *hi) {
                    out.emplace_back(id);
                }
            }
            continue;
        }
        const auto alg = qng::parse_algorithm(item);
        if (!alg) {
            throw qng::DomainError("unknown algorithm \"" + item + "\"");
        }
        out.push_back(*alg);
    }
    if (out.empty()) {
        throw qng::DomainError("no algorithms selected");
    }
    return out;
}

qng::BaselineOptions options_with(std::optional<std::uint64_t> budget) {
    auto options = qng::baseline_options_from_env();
    if (budget) {
        options.memory_budget_bytes = *budget;
    }
    return options;
}

int run_tensor(const TensorArgs &args) {
    const auto circuit = qng::parse_circuit_file(args.circuit);
    if (circuit.num_qubits() > args.max_qubits) {
        throw qng::ResourceError("circuit has " +
                                 std::to_string(circuit.num_qubits()) +
                                 " qubits, above --max-qubits " +
                                 std::to_string(args.max_qubits));
    }
    const auto params = qng::parse_parameter_list(args.params);
    qng::require_matching_parameters(circuit, params);
    const auto alg = qng::parse_algorithm(args.algorithm);
    if (!alg) {
        throw qng::DomainError("unknown algorithm \"" + args.algorithm + "\"");
    }

    qng::OpCounter counter;
    Eigen::MatrixXcd g;
    if (*alg) {
        const auto li = qng::compute_li_tensor(**alg, circuit, params, counter,
                                               options_with(args.budget));
        const auto berry = qng::compute_berry_vector(circuit, params, counter);
        g = qng::assemble_geometric_tensor(li, berry);
    } else {
        g = qng::compute_geometric_tensor(circuit, params, counter,
                                          !args.no_shortcut)
                .matrix;
    }

    Output out(args.out);
    qng::write_tensor_csv(out.stream(), g);
    if (!args.binary_out.empty()) {
        Output bin(args.binary_out, true);
        qng::write_tensor_binary(bin.stream(), g);
    }
    std::cerr << "gates=" << counter.gate_applications
              << " clones=" << counter.clones
              << " inner_products=" << counter.inner_products << '\n';
    return kExitOk;
}

int run_bench_command(const BenchArgs &args) {
    qng::BenchConfig config;
    config.algorithms = parse_algorithm_list(args.algorithms);
    config.parameter_counts = qng::make_sweep(args.pmin, args.pmax, args.pstep);
    config.num_qubits = args.qubits;
    config.seed = args.seed;
    config.timing = args.timing;
    config.jobs = args.jobs;
    config.options = options_with(args.budget);
    const auto rows = qng::run_bench(config);
    Output out(args.out);
    qng::write_bench_csv(out.stream(), rows);
    return kExitOk;
}

int run_optimize(const OptimizeArgs &args) {
    const auto circuit = qng::parse_circuit_file(args.circuit);
    const auto hamiltonian = qng::parse_hamiltonian_file(args.hamiltonian);
    hamiltonian.validate(circuit.num_qubits());
    const auto initial =
        args.params.empty()
            ? qng::random_parameters(circuit.num_parameters(), args.seed)
            : qng::parse_parameter_list(args.params);
    qng::require_matching_parameters(circuit, initial);

    qng::OptimizerConfig config;
    config.timestep = args.dt;
    config.regularization = args.lambda;
    config.max_steps = args.steps;
    config.energy_tolerance = args.tol;
    config.use_diagonal_shortcut = !args.no_shortcut;
    if (args.mode == "natural") {
        config.mode = qng::DescentMode::NaturalGradient;
    } else if (args.mode == "plain") {
        config.mode = qng::DescentMode::PlainGradient;
    } else {
        throw qng::DomainError("--mode must be natural or plain");
    }
    config.validate();

    qng::OpCounter counter;
    const auto trace =
        qng::run_optimization(circuit, initial, hamiltonian, config, counter);
    Output out(args.out);
    qng::write_trace_csv(out.stream(), trace);
    if (!trace.steps.empty()) {
        std::cerr << "final_energy=" << trace.steps.back().energy
                  << " steps=" << trace.steps.size() - 1
                  << " converged=" << (trace.converged ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int run_verify_command(const VerifyArgs &args) {
    qng::VerifyConfig config;
    config.quick = args.quick;
    config.seed = args.seed;
    config.tolerance = args.tol;
    const auto report = qng::run_verify(config);
    qng::write_verify_report(std::cout, report);
    return report.passed() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum geometric tensor and natural-gradient toolkit"};
    app.require_subcommand(1);

    TensorArgs tensor;
    auto *tensor_cmd = app.add_subcommand("tensor", "Evaluate G for one circuit");
    tensor_cmd->add_option("--circuit", tensor.circuit, "Circuit file")
        ->required()
        ->check(CLI::ExistingFile);
    tensor_cmd->add_option("--params", tensor.params, "Comma-separated angles")
        ->required();
    tensor_cmd->add_option("--algorithm", tensor.algorithm, "main or alg2..alg8");
    tensor_cmd->add_flag("--no-diag-shortcut", tensor.no_shortcut,
                         "Always take L_jj as an inner product");
    tensor_cmd->add_option("--out", tensor.out, "CSV output (default stdout)");
    tensor_cmd->add_option("--binary-out", tensor.binary_out,
                           "Packed binary output");
    tensor_cmd->add_option("--max-qubits", tensor.max_qubits,
                           "Refuse larger circuits");
    tensor_cmd->add_option("--memory-budget", tensor.budget,
                           "Bytes allowed for stored-state algorithms");

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "Sweep operation counts over P");
    bench_cmd->add_option("--algorithms", bench.algorithms,
                          "Comma list of main, algK, or algA..algB");
    bench_cmd->add_option("--pmin", bench.pmin)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--pmax", bench.pmax)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--pstep", bench.pstep)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--qubits", bench.qubits)->check(CLI::Range(1, 24));
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_flag("--timing", bench.timing, "Fill the wall_ms column");
    bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");
    bench_cmd->add_option("--memory-budget", bench.budget,
                          "Bytes allowed for stored-state algorithms");

    OptimizeArgs opt;
    auto *opt_cmd = app.add_subcommand("optimize", "Minimize <H> by descent");
    opt_cmd->add_option("--circuit", opt.circuit)->required()->check(CLI::ExistingFile);
    opt_cmd->add_option("--hamiltonian", opt.hamiltonian)
        ->required()
        ->check(CLI::ExistingFile);
    opt_cmd->add_option("--params", opt.params,
                        "Initial angles (default: seeded uniform)");
    opt_cmd->add_option("--seed", opt.seed);
    opt_cmd->add_option("--dt", opt.dt);
    opt_cmd->add_option("--lambda", opt.lambda);
    opt_cmd->add_option("--steps", opt.steps);
    opt_cmd->add_option("--tol", opt.tol);
    opt_cmd->add_option("--mode", opt.mode, "natural or plain");
    opt_cmd->add_flag("--no-diag-shortcut", opt.no_shortcut);
    opt_cmd->add_option("--out", opt.out, "CSV output (default stdout)");

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Run the built-in self checks");
    ver_cmd->add_flag("--quick", ver.quick, "Smaller suite");
    ver_cmd->add_option("--seed", ver.seed);
    ver_cmd->add_option("--tol", ver.tol, "Override every numeric tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tensor_cmd) {
            return run_tensor(tensor);
        }
        if (*bench_cmd) {
            return run_bench_command(bench);
        }
        if (*opt_cmd) {
            return run_optimize(opt);
        }
        return run_verify_command(ver);
    } catch (const qng::ResourceError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const qng::SingularMetricError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const qng::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qng::UnsupportedGateError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qng::DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc &) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    }
}
