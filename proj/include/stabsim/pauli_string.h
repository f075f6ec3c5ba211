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

#ifndef STABSIM_PAULI_STRING_H
#define STABSIM_PAULI_STRING_H

#include <iosfwd>
#include <random>
#include <string>
#include <string_view>

#include "stabsim/bit_buffer.h"

namespace stabsim {

/// Single-qubit Pauli in the xz encoding: bit 0 is the x bit, bit 1 is the z bit.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline Pauli pauli_from_xz(bool x, bool z) {
    return static_cast<Pauli>(uint8_t{x} | (uint8_t{z} << 1));
}
inline char pauli_char(bool x, bool z) {
    return "_XZY"[uint8_t{x} | (uint8_t{z} << 1)];
}

/// Read-only view of a signed Pauli product.
struct PauliStringView {
    size_t num_qubits;
    bool sign;
    BitView xs;
    BitView zs;

    Pauli operator[](size_t q) const {
        return pauli_from_xz(xs.get(q), zs.get(q));
    }
    bool operator==(const PauliStringView &other) const;
    std::string str() const;
};

/// Mutable view of a signed Pauli product whose bits live elsewhere (e.g. a tableau column).
class PauliStringRef {
  public:
    PauliStringRef(size_t num_qubits, BitProxy sign, BitRef xs, BitRef zs)
        : num_qubits(num_qubits), sign(sign), xs(xs), zs(zs) {
    }

    operator PauliStringView() const {
        return {num_qubits, static_cast<bool>(sign), xs, zs};
    }

    /// Multiplies `rhs` into this string from the right, ignoring both signs.
    ///
    /// Returns k in {0,1,2,3} such that (old lhs) * rhs == i^k * (new lhs) for the unsigned
    /// products. The caller decides what to do with the phase.
    uint8_t mul_inplace_with_phase(PauliStringView rhs) const;

    /// Signed right-multiplication. Throws std::invalid_argument if the product has an imaginary phase
    /// (i.e. the two strings anticommute).
    const PauliStringRef &operator*=(PauliStringView rhs) const;

    /// Right-multiplies `rhs` times an extra factor of i^extra_log_i. The resulting phase must be real.
    void mul_with_extra_phase(PauliStringView rhs, uint8_t extra_log_i) const;

    void overwrite_with(PauliStringView other) const;
    void swap_with(PauliStringRef other) const;

    std::string str() const {
        return static_cast<PauliStringView>(*this).str();
    }

    size_t num_qubits;
    BitProxy sign;
    BitRef xs;
    BitRef zs;
};

/// Owning signed Pauli product over `num_qubits` qubits, stored as separate x and z bit planes.
class PauliString {
  public:
    explicit PauliString(size_t num_qubits = 0) : num_qubits(num_qubits), xs(num_qubits), zs(num_qubits) {
    }
    PauliString(PauliStringView view);

    /// Parses text like "+_XYZ", "-Y", "ZIX". '_' and 'I' both mean identity.
    /// Throws ParseError (with a 1-based column) on bad input.
    static PauliString from_str(std::string_view text);
    static PauliString random(size_t num_qubits, std::mt19937_64 &rng);

    PauliStringRef ref() {
        return {num_qubits, BitProxy(&sign), xs.ref(), zs.ref()};
    }
    PauliStringView view() const {
        return {num_qubits, sign, xs.view(), zs.view()};
    }
    operator PauliStringView() const {
        return view();
    }

    Pauli operator[](size_t q) const {
        return pauli_from_xz(xs[q], zs[q]);
    }
    void set(size_t q, Pauli p) {
        xs.set(q, static_cast<uint8_t>(p) & 1);
        zs.set(q, static_cast<uint8_t>(p) & 2);
    }

    /// Signed product. Throws if the factors anticommute (product would carry a factor of ±i).
    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const;
    std::string str() const {
        return view().str();
    }

    size_t num_qubits;
    bool sign = false;
    BitBuffer xs;
    BitBuffer zs;
};

/// Free-function form of PauliStringRef::mul_inplace_with_phase.
uint8_t mul_inplace_with_phase(PauliStringRef lhs, PauliStringView rhs);

/// True iff the two (equal length) strings commute.
bool commutes(PauliStringView a, PauliStringView b);

PauliString parse_pauli(std::string_view text);
std::string format_pauli(PauliStringView p);

std::ostream &operator<<(std::ostream &out, const PauliString &p);
std::ostream &operator<<(std::ostream &out, const PauliStringView &p);

}  // namespace stabsim

#endif
