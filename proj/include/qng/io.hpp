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
 * Text formats for circuits and Hamiltonians.
 *
 * Circuit files are line based; '#' starts a comment. The first statement
 * must be `qubits N`. Each following gate line owns the next parameter.
 *
 *     qubits N
 *     input K                      basis index of |in>, little-endian (default 0)
 *     rx q | ry q | rz q           scale-1/2 Pauli rotations
 *     crx c q | cry c q | crz c q  controlled rotations
 *     prx q rate | pry q rate | prz q rate
 *                                  rotations with phase e^{i rate theta}
 *     rot s P..                    exp(i s theta P..), e.g. "rot 0.5 X0 Y1"
 *     crot c s P..                 controlled version
 *     prot s rate P..              phased version
 *     gen f P.. [; f P..]...       exp(i sum_j f_j(theta) P_j); f is "a" for
 *                                  a*theta or "a,b" for a*theta + b
 *
 * Hamiltonian files hold one term per line: `coeff P..`, e.g.
 * `0.5 X0 X1`. A bare coefficient (or `coeff I`) is an identity term.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qng/ansatz.hpp"
#include "qng/optimizer.hpp"

namespace qng {

[[nodiscard]] AnsatzCircuit parse_circuit(std::istream &in,
                                          const std::string &source = "<circuit>");
[[nodiscard]] AnsatzCircuit parse_circuit_file(const std::filesystem::path &path);

/// Inverse of parse_circuit. Generators must have affine coefficients.
[[nodiscard]] std::string format_circuit(const AnsatzCircuit &circuit);

[[nodiscard]] PauliSumHamiltonian
parse_hamiltonian(std::istream &in, const std::string &source = "<hamiltonian>");
[[nodiscard]] PauliSumHamiltonian
parse_hamiltonian_file(const std::filesystem::path &path);

/// Comma-separated reals, e.g. "0.1,0.2,-3".
[[nodiscard]] ParameterVector parse_parameter_list(const std::string &text);

} // namespace qng
