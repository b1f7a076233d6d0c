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
// Hand-rolled generators for property tests. All draws go through
// qng::StableRng so a failing case is reproducible from its seed.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "qng/ansatz.hpp"
#include "qng/random.hpp"

namespace gen {

using qng::StableRng;

inline qng::Statevector random_state(std::size_t n, StableRng &rng) {
    std::vector<std::complex<double>> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto &a : amps) {
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        norm2 += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm2);
    }
    return qng::Statevector(n, std::move(amps));
}

inline qng::Pauli random_label(StableRng &rng) {
    constexpr std::array<qng::Pauli, 3> labels{qng::Pauli::X, qng::Pauli::Y,
                                               qng::Pauli::Z};
    return labels[rng.below(3)];
}

// Distinct qubits drawn from [0, n), excluding `avoid` when given.
inline std::vector<std::size_t> random_qubits(std::size_t n, std::size_t count,
                                              StableRng &rng,
                                              std::optional<std::size_t> avoid = {}) {
    std::vector<std::size_t> pool;
    for (std::size_t q = 0; q < n; ++q) {
        if (q != avoid) {
            pool.push_back(q);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < count && !pool.empty(); ++k) {
        const auto at = rng.below(pool.size());
        out.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    return out;
}

inline qng::PauliString random_pauli(std::size_t n, std::size_t max_weight,
                                     StableRng &rng,
                                     std::optional<std::size_t> avoid = {}) {
    const std::size_t weight = 1 + rng.below(max_weight);
    std::vector<qng::PauliFactor> factors;
    for (std::size_t q : random_qubits(n, weight, rng, avoid)) {
        factors.push_back({q, random_label(rng)});
    }
    return qng::PauliString(std::move(factors));
}

inline qng::GateGenerator random_generator(std::size_t n, StableRng &rng) {
    std::vector<qng::GeneratorTerm> terms;
    const std::size_t count = 1 + rng.below(3);
    // Keep the whole generator on at most three qubits.
    const auto support = random_qubits(n, std::min<std::size_t>(3, n), rng);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<qng::PauliFactor> factors;
        const std::size_t weight = 1 + rng.below(support.size());
        std::vector<std::size_t> picked = support;
        for (std::size_t k = 0; k < weight; ++k) {
            const auto at = rng.below(picked.size());
            factors.push_back({picked[at], random_label(rng)});
            picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(at));
        }
        terms.push_back({qng::CoefficientFunction::linear(rng.uniform(-1.0, 1.0),
                                                          rng.uniform(-1.0, 1.0)),
                         qng::PauliString(std::move(factors))});
    }
    return qng::GateGenerator(std::move(terms));
}

enum class Family { Rotation, Controlled, Generated, Phased };

inline qng::ParameterizedGate random_gate(std::size_t n, Family family,
                                          StableRng &rng) {
    const double scale = rng.uniform(0.1, 1.5);
    switch (family) {
    case Family::Rotation:
        return qng::PauliRotation{random_pauli(n, std::min<std::size_t>(2, n), rng),
                                  scale};
    case Family::Controlled: {
        const std::size_t c = rng.below(n);
        return qng::ControlledPauliRotation{
            c, random_pauli(n, std::min<std::size_t>(2, n - 1), rng, c), scale};
    }
    case Family::Generated:
        return qng::GeneralGenerated{random_generator(n, rng)};
    case Family::Phased:
        return qng::PhasedPauliRotation{
            random_pauli(n, std::min<std::size_t>(2, n), rng), scale,
            rng.uniform(-1.0, 1.0)};
    }
    return qng::ParameterizedGate::rx(0);
}

inline Family random_family(std::size_t n, StableRng &rng) {
    const auto f = static_cast<Family>(rng.below(4));
    return (n < 2 && f == Family::Controlled) ? Family::Rotation : f;
}

// Circuit mixing every gate family; |in> is a random basis state.
inline qng::AnsatzCircuit random_mixed_circuit(std::size_t n, std::size_t p,
                                               StableRng &rng) {
    std::vector<qng::ParameterizedGate> gates;
    for (std::size_t k = 0; k < p; ++k) {
        gates.push_back(random_gate(n, random_family(n, rng), rng));
    }
    return {n, std::move(gates), rng.below(std::uint64_t{1} << n)};
}

inline std::vector<double> random_angles(std::size_t p, StableRng &rng) {
    std::vector<double> out(p);
    for (auto &v : out) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return out;
}

} // namespace gen
