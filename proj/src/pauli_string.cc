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

#include "stabsim/pauli_string.h"

#include <ostream>

#include "stabsim/parse_error.h"

namespace stabsim {

namespace {

void require_same_size(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument(
            "Pauli string length mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " qubits");
    }
}

}  // namespace

bool PauliStringView::operator==(const PauliStringView &other) const {
    return num_qubits == other.num_qubits && sign == other.sign && xs == other.xs && zs == other.zs;
}

std::string PauliStringView::str() const {
    std::string result;
    result.reserve(num_qubits + 1);
    result.push_back(sign ? '-' : '+');
    for (size_t q = 0; q < num_qubits; q++) {
        result.push_back(pauli_char(xs.get(q), zs.get(q)));
    }
    return result;
}

uint8_t PauliStringRef::mul_inplace_with_phase(PauliStringView rhs) const {
    require_same_size(num_qubits, rhs.num_qubits);
    uint64_t *x1 = xs.data();
    uint64_t *z1 = zs.data();
    const uint64_t *x2 = rhs.xs.data();
    const uint64_t *z2 = rhs.zs.data();
    size_t n = xs.num_u64();

    // The 1s and 2s bits of 64 parallel two-bit counters (one per bit lane).
    uint64_t c1 = 0;
    uint64_t c2 = 0;
    for (size_t k = 0; k < n; k++) {
        uint64_t old_x1 = x1[k];
        uint64_t old_z1 = z1[k];
        uint64_t rx = x2[k];
        uint64_t rz = z2[k];
        uint64_t new_x1 = old_x1 ^ rx;
        uint64_t new_z1 = old_z1 ^ rz;
        x1[k] = new_x1;
        z1[k] = new_z1;
        uint64_t x1z2 = old_x1 & rz;
        uint64_t anti_commutes = (rx & old_z1) ^ x1z2;
        c2 ^= (c1 ^ new_x1 ^ new_z1 ^ x1z2) & anti_commutes;
        c1 ^= anti_commutes;
    }
    return static_cast<uint8_t>((std::popcount(c1) + 2 * std::popcount(c2)) & 3);
}

void PauliStringRef::mul_with_extra_phase(PauliStringView rhs, uint8_t extra_log_i) const {
    uint8_t log_i = mul_inplace_with_phase(rhs);
    log_i += extra_log_i;
    log_i += rhs.sign ? 2 : 0;
    if (log_i & 1) {
        throw std::invalid_argument("Pauli product has an imaginary phase (the factors anticommute).");
    }
    sign ^= static_cast<bool>(log_i & 2);
}

const PauliStringRef &PauliStringRef::operator*=(PauliStringView rhs) const {
    mul_with_extra_phase(rhs, 0);
    return *this;
}

void PauliStringRef::overwrite_with(PauliStringView other) const {
    require_same_size(num_qubits, other.num_qubits);
    sign = other.sign;
    xs.overwrite_with(other.xs);
    zs.overwrite_with(other.zs);
}

void PauliStringRef::swap_with(PauliStringRef other) const {
    require_same_size(num_qubits, other.num_qubits);
    sign.swap_with(other.sign);
    xs.swap_with(other.xs);
    zs.swap_with(other.zs);
}

PauliString::PauliString(PauliStringView view) : PauliString(view.num_qubits) {
    ref().overwrite_with(view);
}

PauliString PauliString::from_str(std::string_view text) {
    bool sign = false;
    size_t offset = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-';
        offset = 1;
    }
    if (offset == text.size()) {
        throw ParseError("Pauli string has no Pauli terms: '" + std::string(text) + "'", 0, offset + 1);
    }
    PauliString result(text.size() - offset);
    result.sign = sign;
    for (size_t k = offset; k < text.size(); k++) {
        size_t q = k - offset;
        switch (text[k]) {
            case '_':
            case 'I':
                break;
            case 'X':
                result.set(q, Pauli::X);
                break;
            case 'Y':
                result.set(q, Pauli::Y);
                break;
            case 'Z':
                result.set(q, Pauli::Z);
                break;
            default:
                throw ParseError(
                    "unrecognized Pauli character '" + std::string(1, text[k]) + "' in '" + std::string(text) + "'",
                    0,
                    k + 1);
        }
    }
    return result;
}

PauliString PauliString::random(size_t num_qubits, std::mt19937_64 &rng) {
    PauliString result(num_qubits);
    result.xs.randomize(rng);
    result.zs.randomize(rng);
    result.sign = rng() & 1;
    return result;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString result = *this;
    result *= rhs;
    return result;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    ref() *= rhs.view();
    return *this;
}

bool PauliString::operator==(const PauliString &other) const {
    return view() == other.view();
}

uint8_t mul_inplace_with_phase(PauliStringRef lhs, PauliStringView rhs) {
    return lhs.mul_inplace_with_phase(rhs);
}

bool commutes(PauliStringView a, PauliStringView b) {
    require_same_size(a.num_qubits, b.num_qubits);
    const uint64_t *x1 = a.xs.data();
    const uint64_t *z1 = a.zs.data();
    const uint64_t *x2 = b.xs.data();
    const uint64_t *z2 = b.zs.data();
    uint64_t acc = 0;
    for (size_t k = 0; k < a.xs.num_u64(); k++) {
        acc ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString parse_pauli(std::string_view text) {
    return PauliString::from_str(text);
}

std::string format_pauli(PauliStringView p) {
    return p.str();
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

std::ostream &operator<<(std::ostream &out, const PauliStringView &p) {
    return out << p.str();
}

}  // namespace stabsim
