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
 * Quantum geometric tensor G = L - T^* T of an ansatz circuit, computed by
 * rolling prefix/infix/suffix recurrences in O(P^2) primitive operations and
 * a fixed set of five workspace statevectors.
 *
 * Definitions (zero-based i, j):
 *   T_j  = <psi | d_j psi>
 *   L_ij = <d_i psi | d_j psi>
 *   G_ij = L_ij - conj(T_i) T_j
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "qng/ansatz.hpp"
#include "qng/statevector.hpp"

namespace qng {

/// T_j for every parameter.
struct BerryVector {
    std::vector<complex_t> entries;

    [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
    [[nodiscard]] complex_t operator[](std::size_t j) const { return entries[j]; }
};

/// Packed upper triangle of L (i <= j). The lower triangle is implied by
/// L_ji = conj(L_ij).
class LiTensor {
  public:
    explicit LiTensor(std::size_t num_parameters);

    [[nodiscard]] std::size_t size() const noexcept { return p_; }

    /// Any (i, j); lower-triangle reads are mirrored.
    [[nodiscard]] complex_t operator()(std::size_t i, std::size_t j) const;
    /// Requires i <= j.
    void set(std::size_t i, std::size_t j, complex_t value);

    [[nodiscard]] Eigen::MatrixXcd to_matrix() const;

  private:
    [[nodiscard]] std::size_t packed_index(std::size_t i, std::size_t j) const;

    std::size_t p_;
    std::vector<complex_t> upper_;
};

struct GeometricTensor {
    Eigen::MatrixXcd matrix;
    BerryVector berry;
    LiTensor li;
};

/// Unpacks G_ij = L_ij - conj(T_i) T_j with Hermitian mirroring of L.
[[nodiscard]] Eigen::MatrixXcd assemble_geometric_tensor(const LiTensor &li,
                                                         const BerryVector &berry);

/// Same, from an explicitly stored full L matrix (both triangles).
[[nodiscard]] Eigen::MatrixXcd
assemble_geometric_tensor(const Eigen::MatrixXcd &li, const BerryVector &berry);

/**
 * @brief Full geometric tensor via the rolling-register recurrence.
 *
 * Workspaces: chi (= U_1|in>, fixed after the first step), psi (rolling
 * suffix U_{j-1}..U_1|in>), phi (infix image of the derivative seed),
 * lambda and mu (rolling prefix and its derivative image). Plus |in>.
 *
 * With `use_diagonal_shortcut`, L_jj comes from diagonal_value() whenever the
 * gate kind allows it, saving one inner product per such gate; the controlled
 * variant reads the control probability from psi = |psi>_{j-1}.
 *
 * Primitive counts (no shortcut):
 *   gates  = (3P^2 + P) / 2
 *   clones = (P^2 + 3P + 2) / 2
 *   inner products = (P^2 + 3P) / 2, less one per shortcut diagonal.
 *
 * @param ansatz_state If non-null, receives U_P..U_1|in> (the final contents
 * of the psi register).
 */
[[nodiscard]] GeometricTensor
compute_geometric_tensor(const AnsatzCircuit &circuit,
                         const ParameterVector &params, OpCounter &counter,
                         bool use_diagonal_shortcut = true,
                         Statevector *ansatz_state = nullptr);

/// T alone in 2P gate applications and P + 1 clones.
[[nodiscard]] BerryVector compute_berry_vector(const AnsatzCircuit &circuit,
                                               const ParameterVector &params,
                                               OpCounter &counter);

struct PrimitiveCounts {
    std::uint64_t gates;
    std::uint64_t clones;

    [[nodiscard]] std::uint64_t total() const noexcept { return gates + clones; }
};

/// Gate and clone counts of compute_geometric_tensor for P parameters.
[[nodiscard]] PrimitiveCounts geometric_tensor_cost(std::uint64_t p);

/// Number of statevectors compute_geometric_tensor keeps alive, |in>
/// included.
inline constexpr std::size_t kGeometricTensorRegisters = 6;

/// One line per entry: "i,j,re,im" with a header, zero-based indices,
/// shortest round-trip decimal formatting.
void write_tensor_csv(std::ostream &out, const Eigen::MatrixXcd &matrix);

/**
 * @brief Packed binary dump of a square complex matrix.
 *
 * Layout (little-endian):
 *   bytes 0..3   magic "QGT1"
 *   bytes 4..11  uint64 P
 *   then P*P entries in row-major order, each two float64 (re, im).
 */
void write_tensor_binary(std::ostream &out, const Eigen::MatrixXcd &matrix);
[[nodiscard]] Eigen::MatrixXcd read_tensor_binary(std::istream &in);

} // namespace qng
