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

#include <chrono>
#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "qng/error.hpp"
#include "qng/gates.hpp"
#include "qng/statevector.hpp"

using namespace qng;
using Catch::Approx;

namespace {

double max_diff(const Statevector &s, const oracle::Vec &v) {
    return (oracle::to_vec(s) - v).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("make_basis_state places a single unit amplitude", "[statevector]") {
    const auto a = make_basis_state(1, 0);
    CHECK(a[0] == complex_t(1.0, 0.0));
    CHECK(a[1] == complex_t(0.0, 0.0));

    const auto b = make_basis_state(2, 3);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == 0.0);
    CHECK(b[1] == 0.0);
    CHECK(b[2] == 0.0);
    CHECK(b[3] == 1.0);

    CHECK_THROWS_AS(make_basis_state(1, 2), DomainError);
    CHECK_THROWS_AS(Statevector(0), DomainError);
}

TEST_CASE("clone_into copies exactly and counts one clone", "[statevector]") {
    OpCounter counter;
    Statevector src(1, {{1.0, 0.0}, {0.0, 0.0}});
    Statevector dst(1, {{0.0, 0.0}, {1.0, 0.0}});
    clone_into(src, dst, counter);
    CHECK(dst[0] == 1.0);
    CHECK(dst[1] == 0.0);
    CHECK(counter == OpCounter{0, 1, 0});

    Statevector src2(1, {{0.6, 0.0}, {0.0, 0.8}});
    clone_into(src2, dst, counter);
    CHECK(dst[0] == complex_t(0.6, 0.0));
    CHECK(dst[1] == complex_t(0.0, 0.8));
    CHECK(src2[1] == complex_t(0.0, 0.8));
    CHECK(counter.clones == 2);

    Statevector wide(2);
    CHECK_THROWS_AS(clone_into(src, wide, counter), DomainError);
}

TEST_CASE("inner_product conjugates the bra", "[statevector]") {
    OpCounter counter;
    StableRng rng(11);
    const auto psi = gen::random_state(3, rng);
    const auto one = inner_product(psi, psi, counter);
    CHECK(std::abs(one - 1.0) <= 1e-12);

    CHECK(inner_product(make_basis_state(1, 0), make_basis_state(1, 1), counter) ==
          0.0);

    const double r = 1.0 / std::sqrt(2.0);
    Statevector plus(1, {{r, 0.0}, {r, 0.0}});
    Statevector minus(1, {{r, 0.0}, {-r, 0.0}});
    CHECK(std::abs(inner_product(plus, minus, counter)) <= 1e-15);

    Statevector a(1, {{0.0, 1.0}, {0.0, 0.0}});
    Statevector b(1, {{1.0, 0.0}, {0.0, 0.0}});
    CHECK(inner_product(a, b, counter) == complex_t(0.0, -1.0));
    CHECK(counter == OpCounter{0, 0, 4});

    CHECK_THROWS_AS(inner_product(a, Statevector(2), counter), DomainError);
}

TEST_CASE("apply_operator follows the documented examples", "[statevector]") {
    OpCounter counter;
    auto s = make_basis_state(1, 0);
    apply_operator(s, GateOperator::pauli(PauliString::parse("X0")), counter);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);

    StableRng rng(5);
    const auto psi = gen::random_state(2, rng);
    auto same = psi;
    apply_operator(same, gate_unitary(ParameterizedGate::rx(1), 0.0), counter);
    for (std::size_t k = 0; k < psi.size(); ++k) {
        CHECK(same[k] == psi[k]);
    }

    // RX(pi) = cos(pi/2) I + i sin(pi/2) X.
    auto zero = make_basis_state(1, 0);
    apply_operator(zero, gate_unitary(ParameterizedGate::rx(0), std::numbers::pi),
                   counter);
    const oracle::Vec expected =
        oracle::expm(oracle::cplx(0, 0.5 * std::numbers::pi) *
                     oracle::pauli_full(PauliString::parse("X0"), 1)) *
        oracle::basis(1, 0);
    CHECK(max_diff(zero, expected) <= 1e-15);
    CHECK(std::abs(zero[1] - complex_t(0.0, 1.0)) <= 1e-15);
    CHECK(counter.gate_applications == 3);
}

TEST_CASE("apply_operator rejects bad qubit sets", "[statevector]") {
    OpCounter counter;
    auto s = make_basis_state(2, 0);
    CHECK_THROWS_AS(
        apply_operator(s, GateOperator::pauli(PauliString::parse("X2")), counter),
        DomainError);
    PauliOperator bad{PauliString::parse("X0"), 0.0, 1.0, std::size_t{0}, 1.0};
    CHECK_THROWS_AS(apply_operator(s, bad, counter), DomainError);
    CHECK(counter.gate_applications == 0);
}

TEST_CASE("Pauli strings act like their dense matrices", "[statevector][property]") {
    StableRng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const auto p = gen::random_pauli(n, n, rng);
        const auto psi = gen::random_state(n, rng);
        auto s = psi;
        OpCounter counter;
        apply_operator(s, GateOperator::pauli(p), counter);
        const oracle::Vec want = oracle::pauli_full(p, n) * oracle::to_vec(psi);
        REQUIRE(max_diff(s, want) <= 1e-14);
        // Self-inverse.
        apply_operator(s, GateOperator::pauli(p), counter);
        REQUIRE(max_diff(s, oracle::to_vec(psi)) <= 1e-12);
    }
}

TEST_CASE("dense operators act like their embedded matrices",
          "[statevector][property]") {
    StableRng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.below(2);
        const std::size_t k = 1 + rng.below(3);
        const auto targets = gen::random_qubits(n, k, rng);
        const std::size_t dim = std::size_t{1} << k;
        std::vector<complex_t> m(dim * dim);
        for (auto &x : m) {
            x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        }
        // Full-space matrix: entry (r, c) is m(local(r), local(c)) when the
        // non-target bits agree.
        const std::size_t full = std::size_t{1} << n;
        oracle::Mat big = oracle::Mat::Zero(static_cast<Eigen::Index>(full),
                                            static_cast<Eigen::Index>(full));
        auto local = [&](std::size_t idx) {
            std::size_t out = 0;
            for (std::size_t b = 0; b < k; ++b) {
                out |= ((idx >> targets[b]) & 1U) << b;
            }
            return out;
        };
        std::size_t mask = 0;
        for (auto t : targets) {
            mask |= std::size_t{1} << t;
        }
        for (std::size_t r = 0; r < full; ++r) {
            for (std::size_t c = 0; c < full; ++c) {
                if ((r & ~mask) == (c & ~mask)) {
                    big(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                        m[local(r) * dim + local(c)];
                }
            }
        }
        const auto psi = gen::random_state(n, rng);
        auto s = psi;
        OpCounter counter;
        apply_operator(s, DenseOperator{targets, m}, counter);
        REQUIRE(max_diff(s, big * oracle::to_vec(psi)) <= 1e-13);
    }
}

TEST_CASE("unitary sequences preserve the norm", "[statevector][property]") {
    StableRng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        auto s = make_basis_state(n, rng.below(std::uint64_t{1} << n));
        OpCounter counter;
        for (int g = 0; g < 30; ++g) {
            const auto gate = gen::random_gate(n, gen::random_family(n, rng), rng);
            apply_operator(s, gate_unitary(gate, rng.uniform(-7, 7)), counter);
        }
        REQUIRE(std::abs(s.norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("the counter tallies scripted primitive sequences exactly",
          "[statevector][property]") {
    StableRng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t k1 = rng.below(20);
        const std::uint64_t k2 = rng.below(20);
        const std::uint64_t k3 = rng.below(20);
        OpCounter counter;
        auto a = make_basis_state(2, 0);
        auto b = make_basis_state(2, 1);
        for (std::uint64_t k = 0; k < k1; ++k) {
            apply_operator(a, GateOperator::pauli(PauliString::parse("Y1")), counter);
        }
        for (std::uint64_t k = 0; k < k2; ++k) {
            clone_into(a, b, counter);
        }
        for (std::uint64_t k = 0; k < k3; ++k) {
            (void)inner_product(a, b, counter);
        }
        REQUIRE(counter == OpCounter{k1, k2, k3});
    }
    OpCounter counter{3, 4, 5};
    counter.reset();
    CHECK(counter == OpCounter{});
}

TEST_CASE("AllocationProbe reports the live high-water mark", "[statevector]") {
    const AllocationProbe probe;
    CHECK(probe.peak() == 0);
    {
        Statevector a(2);
        Statevector b(2);
        CHECK(probe.live() == 2);
        {
            Statevector c = a;
            CHECK(probe.live() == 3);
        }
        CHECK(probe.peak() == 3);
    }
    CHECK(probe.live() == 0);
    CHECK(probe.peak() == 3);
}

TEST_CASE("probability_of_one reads the control marginal", "[statevector]") {
    const double r = 1.0 / std::sqrt(2.0);
    Statevector plus0(2, {{r, 0}, {r, 0}, {0, 0}, {0, 0}});
    CHECK(probability_of_one(plus0, 0) == Approx(0.5));
    CHECK(probability_of_one(plus0, 1) == 0.0);
}

TEST_CASE("gate application time grows like the state size", "[statevector][timing]") {
    // Best of several runs at N and N + 2; the ratio should be near 4.
    auto best_ms = [](std::size_t n) {
        auto s = make_basis_state(n, 0);
        const auto op = gate_unitary(ParameterizedGate::rx(n / 2), 0.3);
        OpCounter counter;
        double best = 1e300;
        for (int rep = 0; rep < 7; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            for (int k = 0; k < 8; ++k) {
                apply_operator(s, op, counter);
            }
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best,
                            std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        return best;
    };
    const double small = best_ms(16);
    const double large = best_ms(18);
    const double ratio = large / small;
    INFO("ratio " << ratio);
    CHECK(ratio >= 2.0);
    CHECK(ratio <= 8.0);
}
