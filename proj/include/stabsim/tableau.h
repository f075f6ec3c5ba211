// Copyright 2026 The stabsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABSIM_TABLEAU_H
#define STABSIM_TABLEAU_H

#include <array>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "stabsim/bit_table.h"
#include "stabsim/pauli_string.h"

namespace stabsim {

enum class Layout : uint8_t { ColumnMajor, RowMajor };

/// Images of one family of generators (all X_q, or all Z_q).
///
/// In column-major layout, row k of `xt`/`zt` holds the x/z bits of the image of generator k, so
/// each image is contiguous. In row-major layout the two tables are transposed: row q holds bit q
/// of every image.
struct TableauHalf {
    explicit TableauHalf(size_t num_qubits);

    size_t num_qubits;
    BitTable xt;
    BitTable zt;
    BitBuffer signs;

    PauliStringRef operator[](size_t k) {
        return {num_qubits, signs[k], xt[k], zt[k]};
    }
    PauliStringView operator[](size_t k) const {
        return {num_qubits, signs[k], xt[k], zt[k]};
    }
};

/// Stabilizer tableau of an n-qubit Clifford operation C.
///
/// Stores the conjugation image C·P·C† of every generator P in {X_0..X_{n-1}, Z_0..Z_{n-1}}, signs
/// included. Column-indexed operations require column-major layout; `TableauTransposedRaii` switches
/// to row-major temporarily for batches of row sweeps.
class Tableau {
  public:
    explicit Tableau(size_t num_qubits = 0);

    static Tableau identity(size_t num_qubits) {
        return Tableau(num_qubits);
    }
    /// Builds a tableau from generator images given as text, e.g. gate_from_text({"+Z"}, {"+X"}) for H.
    static Tableau from_text(const std::vector<std::string> &x_images, const std::vector<std::string> &z_images);
    /// Uniformly random Clifford tableau (symplectic Gram-Schmidt with rejection, random signs).
    static Tableau random(size_t num_qubits, std::mt19937_64 &rng);

    size_t num_qubits;
    TableauHalf xs;
    TableauHalf zs;
    Layout layout() const {
        return layout_;
    }

    PauliString x_output(size_t k) const;
    PauliString z_output(size_t k) const;

    /// True iff the images preserve the commutation relations of the generators.
    bool satisfies_invariants() const;

    /// Out-of-place conjugation: returns C·p·C†. `p` may be longer than the tableau; extra qubits
    /// pass through unchanged.
    PauliString operator()(PauliStringView p) const;
    /// Inplace conjugation of the qubits `targets` of `p` (targets[k] plays the role of qubit k).
    /// Cost is O(m·c) for an m-qubit tableau and c qubits in common; p's length doesn't matter.
    void apply_within(PauliStringRef p, std::span<const size_t> targets) const;

    /// this := op ∘ this (op applied after this), op acting on `targets`.
    void inplace_scatter_append(const Tableau &op, std::span<const size_t> targets);
    /// this := this ∘ op (op applied before this), op acting on `targets`.
    void inplace_scatter_prepend(const Tableau &op, std::span<const size_t> targets);

    /// The Clifford "this, then second".
    Tableau then(const Tableau &second) const;
    Tableau inverse() const;
    Tableau raised_to(int64_t exponent) const;
    /// Same operation embedded into a larger system (identity on the new qubits).
    Tableau expanded(size_t new_num_qubits) const;

    // Specialized prepends. Each is equivalent to inplace_scatter_prepend of the named gate.
    void prepend_X(size_t q);
    void prepend_Y(size_t q);
    void prepend_Z(size_t q);
    void prepend_H(size_t q);
    void prepend_S(size_t q);
    void prepend_S_DAG(size_t q);
    void prepend_SQRT_Y(size_t q);
    void prepend_SQRT_Y_DAG(size_t q);
    void prepend_CNOT(size_t control, size_t target);
    void prepend_CZ(size_t a, size_t b);
    void prepend_SWAP(size_t a, size_t b);

    bool operator==(const Tableau &other) const;
    bool operator!=(const Tableau &other) const {
        return !(*this == other);
    }
    /// Lines "X_k -> ±..." for every k, then "Z_k -> ±..." for every k.
    std::string str() const;

    /// Switches storage orientation (transposes all four bit tables).
    void do_transpose();

  private:
    void require_column_major() const;
    void require_valid_targets(size_t op_qubits, std::span<const size_t> targets) const;

    Layout layout_ = Layout::ColumnMajor;
};

/// Local rule for inverting one 2x2 block of a tableau.
///
/// Input bits (LSB first): x and z of T(X_a) on qubit b, then x and z of T(Z_a) on qubit b.
/// Output bits in the same order: x and z of T^-1(X_b) on qubit a, then x and z of T^-1(Z_b) on
/// qubit a. Derived by brute force from the commutation constraints.
const std::array<uint8_t, 16> &inverse_block_table();

/// Holds a tableau in row-major layout for the lifetime of the object, and exposes the row sweeps
/// used when resolving random measurements. The appends are equivalent to inplace_scatter_append of
/// the named gate.
class TableauTransposedRaii {
  public:
    explicit TableauTransposedRaii(Tableau &tableau);
    ~TableauTransposedRaii();
    TableauTransposedRaii(const TableauTransposedRaii &) = delete;
    TableauTransposedRaii &operator=(const TableauTransposedRaii &) = delete;

    void append_CNOT(size_t control, size_t target);
    void append_H(size_t q);
    void append_H_YZ(size_t q);
    void append_X(size_t q);

    Tableau &tableau;
};

std::ostream &operator<<(std::ostream &out, const Tableau &t);

}  // namespace stabsim

#endif
