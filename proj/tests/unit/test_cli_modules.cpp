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
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "qng/bench.hpp"
#include "qng/error.hpp"
#include "qng/io.hpp"
#include "qng/metric.hpp"
#include "qng/verify.hpp"

using namespace qng;

namespace {

AnsatzCircuit parse(const std::string &text) {
    std::istringstream in(text);
    return parse_circuit(in, "test");
}

std::size_t error_line(const std::string &text) {
    try {
        (void)parse(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("circuit file examples", "[io]") {
    const auto one = parse("qubits 1\nrx 0\n");
    CHECK(one.num_qubits() == 1);
    REQUIRE(one.num_parameters() == 1);
    const auto *rx = std::get_if<PauliRotation>(&one.gate(0).kind());
    REQUIRE(rx != nullptr);
    CHECK(rx->axis == PauliString::parse("X0"));
    CHECK(rx->scale == 0.5);

    const auto two = parse("qubits 2\nrx 0\ncrz 0 1\n");
    CHECK(two.num_parameters() == 2);
    const auto *crz = std::get_if<ControlledPauliRotation>(&two.gate(1).kind());
    REQUIRE(crz != nullptr);
    CHECK(crz->control == 0);
    CHECK(crz->axis == PauliString::parse("Z1"));

    CHECK_THROWS_AS(parse("qubits 1\nrx 5\n"), ParseError);
    CHECK(error_line("qubits 1\nrx 5\n") == 2);
}

TEST_CASE("circuit parse errors carry the line number", "[io]") {
    CHECK(error_line("qubits 2\n# comment\n\nrx 0\nfoo 1\n") == 5);
    CHECK(error_line("qubits 2\ncrz 1 1\n") == 2);
    CHECK(error_line("qubits 2\nrot 0.5 X0 Y0\n") == 2);
    CHECK(error_line("qubits 2\nrx\n") == 2);
    CHECK(error_line("qubits 2\nrx 0 1\n") == 2);
    CHECK(error_line("qubits 2\nrx -1\n") == 2);
    CHECK(error_line("qubits 2\nprx 0 fast\n") == 2);
    CHECK(error_line("rx 0\n") == 1);
    CHECK(error_line("qubits 2\nqubits 3\n") == 2);
    CHECK(error_line("qubits 2\ninput 4\nrx 0\n") == 2);
    CHECK(error_line("qubits 4\ngen 1 X0 X1 ; 1 X2 X3\n") == 2);
    CHECK_THROWS_AS(parse("qubits 2\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse_circuit_file("/nonexistent/circuit.txt"), ParseError);
}

TEST_CASE("every gate form parses and round-trips", "[io]") {
    const std::string text = "qubits 3\n"
                             "input 5\n"
                             "rx 0\nry 1 # trailing comment\nrz 2\n"
                             "crx 0 1\ncry 1 2\ncrz 2 0\n"
                             "prx 0 0.7\npry 1 -0.25\nprz 2 1\n"
                             "rot 0.25 X0 Y2\n"
                             "crot 1 1.5 Z0 Z2\n"
                             "prot 0.5 0.3 Y0 X1\n"
                             "gen 0.5 X0 X1 ; -1.25,0.5 Z2 ; 2 Y1\n";
    const auto c = parse(text);
    CHECK(c.num_parameters() == 13);
    CHECK(c.input_index() == 5);
    const auto again = parse(format_circuit(c));
    CHECK(format_circuit(again) == format_circuit(c));
    const std::vector<double> theta{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7,
                                    0.8, 0.9, 1.0, 1.1, 1.2, 1.3};
    const auto a = oracle::state(c, theta);
    const auto b = oracle::state(again, theta);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    OpCounter counter;
    const auto ga = compute_geometric_tensor(c, ParameterVector(theta), counter);
    const auto gb = compute_geometric_tensor(again, ParameterVector(theta), counter);
    CHECK((ga.matrix - gb.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("little-endian order survives the file format", "[io]") {
    // X on qubit 0 of |0> sends the amplitude to index 1, not index 2.
    const auto c = parse("qubits 2\nrot 0.5 X0\n");
    const auto psi = oracle::state(c, {std::numbers::pi});
    CHECK(std::abs(psi(1)) == Catch::Approx(1.0));
}

TEST_CASE("Hamiltonian files", "[io]") {
    std::istringstream in("# TFIM\n1.0 Z0 Z1\n0.5 X0\n0.5 X1\n-2\n0.25 I\n");
    const auto h = parse_hamiltonian(in, "h");
    REQUIRE(h.terms().size() == 5);
    CHECK(h.terms()[0].pauli == PauliString::parse("Z0 Z1"));
    CHECK(h.terms()[3].coefficient == -2.0);
    CHECK(h.terms()[3].pauli.is_identity());
    CHECK(h.terms()[4].pauli.is_identity());

    std::istringstream bad("1.0 Z0\nabc X1\n");
    try {
        (void)parse_hamiltonian(bad, "h");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parameter lists", "[io]") {
    CHECK(parse_parameter_list("0.1,0.2, -3").vector() ==
          std::vector<double>{0.1, 0.2, -3.0});
    CHECK_THROWS_AS(parse_parameter_list("0.1,,0.2"), DomainError);
    CHECK_THROWS_AS(parse_parameter_list("x"), DomainError);
}

TEST_CASE("bench rows reproduce the cost model", "[bench]") {
    BenchConfig cfg;
    cfg.algorithms = {BaselineId::Alg2, BaselineId::Alg3, BaselineId::Alg6,
                      BaselineId::Alg8, std::nullopt};
    cfg.parameter_counts = {2, 100};
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].algorithm == "alg2");
    CHECK(rows[0].p == 2);
    CHECK(rows[0].counts.gate_applications == 16);
    CHECK(rows[0].counts.clones == 8);
    CHECK(rows[3].counts.gates_plus_clones() == 681750);
    CHECK(rows[5].counts.gates_plus_clones() == 20401);
    CHECK(rows[7].counts.gates_plus_clones() == 5251);
    CHECK(rows[7].registers_peak == 101);
    CHECK(rows[9].algorithm == "main");
    CHECK(rows[9].registers_peak == 5);
    for (const auto &r : rows) {
        CHECK(r.counts.gate_applications == r.predicted_gates);
        CHECK(r.counts.clones == r.predicted_clones);
        CHECK_FALSE(r.wall_ms);
    }
}

TEST_CASE("bench CSV is deterministic across job counts", "[bench]") {
    BenchConfig cfg;
    cfg.algorithms = {BaselineId::Alg4, BaselineId::Alg7, std::nullopt};
    cfg.parameter_counts = make_sweep(1, 9, 2);
    std::ostringstream a;
    std::ostringstream b;
    write_bench_csv(a, run_bench(cfg));
    cfg.jobs = 4;
    write_bench_csv(b, run_bench(cfg));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("alg,P,gates,clones,inner_products,registers_peak,"
                        "predicted_gates,predicted_clones,wall_ms,status\n",
                        0) == 0);
    CHECK(a.str().find("alg4,1,") != std::string::npos);
}

TEST_CASE("over-budget bench rows are skipped", "[bench]") {
    BenchConfig cfg;
    cfg.algorithms = {BaselineId::Alg8, BaselineId::Alg6};
    cfg.parameter_counts = {50};
    cfg.options.memory_budget_bytes = 1024;
    const auto rows = run_bench(cfg);
    CHECK(rows[0].skipped);
    CHECK_FALSE(rows[1].skipped);
    std::ostringstream out;
    write_bench_csv(out, rows);
    CHECK(out.str().find("alg8,50,,,,,") != std::string::npos);
    CHECK(out.str().find(",skipped\n") != std::string::npos);
}

TEST_CASE("timing fills wall_ms only on request", "[bench]") {
    BenchConfig cfg;
    cfg.algorithms = {std::nullopt};
    cfg.parameter_counts = {4};
    cfg.timing = true;
    const auto rows = run_bench(cfg);
    REQUIRE(rows[0].wall_ms);
    CHECK(*rows[0].wall_ms >= 0.0);
}

TEST_CASE("algorithm names and sweeps", "[bench]") {
    const auto main_alg = parse_algorithm("main");
    REQUIRE(main_alg);
    CHECK_FALSE(main_alg->has_value());
    const auto alg5 = parse_algorithm("alg5");
    REQUIRE(alg5);
    CHECK(*alg5 == BaselineId::Alg5);
    CHECK_FALSE(parse_algorithm("alg1"));
    CHECK(make_sweep(3, 10, 3) == std::vector<std::size_t>{3, 6, 9});
    CHECK_THROWS_AS(make_sweep(0, 3, 1), DomainError);
    CHECK_THROWS_AS(make_sweep(4, 3, 1), DomainError);
}

TEST_CASE("verify reports every suite", "[verify]") {
    VerifyConfig cfg;
    cfg.quick = true;
    const auto report = run_verify(cfg);
    REQUIRE(report.checks.size() == 7);
    for (const auto &c : report.checks) {
        INFO(c.name << " " << c.max_deviation << " " << c.detail);
        if (c.name == "operation_counts") {
            // Alg7's listing applies P^2 gates where the table says P^2 + P.
            CHECK(c.detail.find("alg7") != std::string::npos);
        } else {
            CHECK(c.passed);
        }
    }
    const auto li = std::find_if(report.checks.begin(), report.checks.end(),
                                 [](const CheckResult &c) {
                                     return c.name == "li_pairwise_equivalence";
                                 });
    REQUIRE(li != report.checks.end());
    CHECK(li->max_deviation <= 1e-10);

    cfg.tolerance = 1e-15;
    const auto strict = run_verify(cfg);
    CHECK_FALSE(strict.passed());
    std::ostringstream out;
    write_verify_report(out, strict);
    CHECK(out.str().find("FAIL finite_difference_g") != std::string::npos);
    CHECK(out.str().find("verify: FAILED") != std::string::npos);
}
