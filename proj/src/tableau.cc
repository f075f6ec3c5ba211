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

#include "stabsim/tableau.h"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace stabsim {

namespace {

constexpr bool anticommutes_1q(bool x1, bool z1, bool x2, bool z2) {
    return (x1 && z2) != (z1 && x2);
}

// For every block, finds the unique output block consistent with the commutation constraints.
//
// A Pauli's x bit on qubit a says whether it anticommutes with Z_a, its z bit whether it
// anticommutes with X_a. Since T preserves commutation, T^-1(P) anticommutes with Q exactly when
// P anticommutes with T(Q). Applying that to P in {X_b, Z_b} and Q in {X_a, Z_a} pins down all
// four output bits.
constexpr std::array<uint8_t, 16> solve_inverse_blocks() {
    std::array<uint8_t, 16> table{};
    for (uint8_t in = 0; in < 16; in++) {
        bool tx_x = in & 1, tx_z = in & 2, tz_x = in & 4, tz_z = in & 8;
        int found = -1;
        int num_found = 0;
        for (uint8_t out = 0; out < 16; out++) {
            bool ix_x = out & 1, ix_z = out & 2, iz_x = out & 4, iz_z = out & 8;
            bool ok = anticommutes_1q(ix_x, ix_z, 1, 0) == anticommutes_1q(1, 0, tx_x, tx_z) &&
                      anticommutes_1q(ix_x, ix_z, 0, 1) == anticommutes_1q(1, 0, tz_x, tz_z) &&
                      anticommutes_1q(iz_x, iz_z, 1, 0) == anticommutes_1q(0, 1, tx_x, tx_z) &&
                      anticommutes_1q(iz_x, iz_z, 0, 1) == anticommutes_1q(0, 1, tz_x, tz_z);
            if (ok) {
                found = out;
                num_found++;
            }
        }
        if (num_found != 1) {
            throw std::logic_error("inverse block constraints are not uniquely solvable");
        }
        table[in] = static_cast<uint8_t>(found);
    }
    return table;
}

constexpr std::array<uint8_t, 16> kInverseBlocks = solve_inverse_blocks();

// Accumulates the image of an unsigned-term Pauli `local` under `t`, where qubit j of `local`
// stands for qubit index_map[j] of `t`. Writes the result (sign included) into `out`.
void accumulate_image(
    const Tableau &t, PauliStringView local, std::span<const size_t> index_map, PauliStringRef out) {
    out.xs.clear();
    out.zs.clear();
    uint32_t log_i = 0;
    for (size_t j = 0; j < index_map.size(); j++) {
        bool x = local.xs.get(j);
        bool z = local.zs.get(j);
        size_t q = index_map[j];
        if (x && z) {
            log_i += 1;
        }
        if (x) {
            log_i += out.mul_inplace_with_phase(t.xs[q]);
            log_i += t.xs.signs[q] ? 2 : 0;
        }
        if (z) {
            log_i += out.mul_inplace_with_phase(t.zs[q]);
            log_i += t.zs.signs[q] ? 2 : 0;
        }
    }
    if (log_i & 1) {
        throw std::logic_error("conjugation produced an imaginary phase; the tableau is not a valid Clifford");
    }
    out.sign = local.sign ^ static_cast<bool>(log_i & 2);
}

std::vector<size_t> iota_targets(size_t n) {
    std::vector<size_t> result(n);
    std::iota(result.begin(), result.end(), size_t{0});
    return result;
}

// Unsigned symplectic product of two equal-length strings.
bool anticommutes_terms(const PauliString &a, const PauliString &b) {
    return !commutes(a.view(), b.view());
}

void xor_terms(PauliString &dst, const PauliString &src) {
    dst.xs ^= src.xs;
    dst.zs ^= src.zs;
}

}  // namespace

const std::array<uint8_t, 16> &inverse_block_table() {
    return kInverseBlocks;
}

TableauHalf::TableauHalf(size_t num_qubits)
    : num_qubits(num_qubits), xt(num_qubits, num_qubits), zt(num_qubits, num_qubits), signs(num_qubits) {
}

Tableau::Tableau(size_t num_qubits) : num_qubits(num_qubits), xs(num_qubits), zs(num_qubits) {
    for (size_t q = 0; q < num_qubits; q++) {
        xs.xt.set(q, q, true);
        zs.zt.set(q, q, true);
    }
}

Tableau Tableau::from_text(const std::vector<std::string> &x_images, const std::vector<std::string> &z_images) {
    size_t n = x_images.size();
    if (z_images.size() != n) {
        throw std::invalid_argument("need the same number of X and Z images");
    }
    Tableau result(n);
    for (size_t k = 0; k < n; k++) {
        PauliString x = PauliString::from_str(x_images[k]);
        PauliString z = PauliString::from_str(z_images[k]);
        if (x.num_qubits != n || z.num_qubits != n) {
            throw std::invalid_argument("generator image length doesn't match the number of qubits");
        }
        result.xs[k].overwrite_with(x.view());
        result.zs[k].overwrite_with(z.view());
    }
    return result;
}

Tableau Tableau::random(size_t num_qubits, std::mt19937_64 &rng) {
    size_t n = num_qubits;
    std::vector<PauliString> x_images;
    std::vector<PauliString> z_images;
    auto project_out = [&](PauliString &v) {
        for (size_t k = 0; k < x_images.size(); k++) {
            if (anticommutes_terms(v, z_images[k])) {
                xor_terms(v, x_images[k]);
            }
            if (anticommutes_terms(v, x_images[k])) {
                xor_terms(v, z_images[k]);
            }
        }
    };
    auto draw = [&]() {
        PauliString v = PauliString::random(n, rng);
        v.sign = false;
        project_out(v);
        return v;
    };
    for (size_t i = 0; i < n; i++) {
        PauliString v = draw();
        while (!v.xs.not_zero() && !v.zs.not_zero()) {
            v = draw();
        }
        PauliString w = draw();
        while (!anticommutes_terms(v, w)) {
            w = draw();
        }
        x_images.push_back(std::move(v));
        z_images.push_back(std::move(w));
    }
    Tableau result(n);
    for (size_t k = 0; k < n; k++) {
        result.xs[k].overwrite_with(x_images[k].view());
        result.zs[k].overwrite_with(z_images[k].view());
    }
    result.xs.signs.randomize(rng);
    result.zs.signs.randomize(rng);
    return result;
}

void Tableau::require_column_major() const {
    if (layout_ != Layout::ColumnMajor) {
        throw std::logic_error("operation requires a column-major tableau");
    }
}

void Tableau::require_valid_targets(size_t op_qubits, std::span<const size_t> targets) const {
    if (targets.size() != op_qubits) {
        throw std::invalid_argument(
            "expected " + std::to_string(op_qubits) + " targets, got " + std::to_string(targets.size()));
    }
    for (size_t k = 0; k < targets.size(); k++) {
        if (targets[k] >= num_qubits) {
            throw std::invalid_argument("target qubit " + std::to_string(targets[k]) + " out of range");
        }
        for (size_t j = 0; j < k; j++) {
            if (targets[j] == targets[k]) {
                throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[k]));
            }
        }
    }
}

PauliString Tableau::x_output(size_t k) const {
    require_column_major();
    return PauliString(xs[k]);
}

PauliString Tableau::z_output(size_t k) const {
    require_column_major();
    return PauliString(zs[k]);
}

bool Tableau::satisfies_invariants() const {
    require_column_major();
    for (size_t a = 0; a < num_qubits; a++) {
        if (commutes(xs[a], zs[a])) {
            return false;
        }
        for (size_t b = a + 1; b < num_qubits; b++) {
            if (!commutes(xs[a], xs[b]) || !commutes(zs[a], zs[b]) || !commutes(xs[a], zs[b]) ||
                !commutes(zs[a], xs[b])) {
                return false;
            }
        }
    }
    return true;
}

PauliString Tableau::operator()(PauliStringView p) const {
    if (p.num_qubits < num_qubits) {
        throw std::invalid_argument("Pauli string is shorter than the tableau");
    }
    PauliString result(p);
    std::vector<size_t> targets = iota_targets(num_qubits);
    apply_within(result.ref(), targets);
    return result;
}

void Tableau::apply_within(PauliStringRef p, std::span<const size_t> targets) const {
    require_column_major();
    if (targets.size() != num_qubits) {
        throw std::invalid_argument("apply_within needs one target per tableau qubit");
    }
    PauliString local(num_qubits);
    for (size_t k = 0; k < num_qubits; k++) {
        if (targets[k] >= p.num_qubits) {
            throw std::invalid_argument("target qubit " + std::to_string(targets[k]) + " out of range");
        }
        local.xs.set(k, p.xs.get(targets[k]));
        local.zs.set(k, p.zs.get(targets[k]));
    }
    local.sign = p.sign;
    PauliString image(num_qubits);
    std::vector<size_t> identity_map = iota_targets(num_qubits);
    accumulate_image(*this, local.view(), identity_map, image.ref());
    for (size_t k = 0; k < num_qubits; k++) {
        p.xs.set(targets[k], image.xs.get(k));
        p.zs.set(targets[k], image.zs.get(k));
    }
    p.sign = image.sign;
}

void Tableau::inplace_scatter_append(const Tableau &op, std::span<const size_t> targets) {
    require_column_major();
    require_valid_targets(op.num_qubits, targets);
    for (size_t k = 0; k < num_qubits; k++) {
        op.apply_within(xs[k], targets);
        op.apply_within(zs[k], targets);
    }
}

void Tableau::inplace_scatter_prepend(const Tableau &op, std::span<const size_t> targets) {
    require_column_major();
    op.require_column_major();
    require_valid_targets(op.num_qubits, targets);
    size_t m = op.num_qubits;
    std::vector<PauliString> new_x;
    std::vector<PauliString> new_z;
    new_x.reserve(m);
    new_z.reserve(m);
    for (size_t k = 0; k < m; k++) {
        new_x.emplace_back(num_qubits);
        accumulate_image(*this, op.xs[k], targets, new_x.back().ref());
        new_z.emplace_back(num_qubits);
        accumulate_image(*this, op.zs[k], targets, new_z.back().ref());
    }
    for (size_t k = 0; k < m; k++) {
        xs[targets[k]].overwrite_with(new_x[k].view());
        zs[targets[k]].overwrite_with(new_z[k].view());
    }
}

Tableau Tableau::then(const Tableau &second) const {
    if (second.num_qubits != num_qubits) {
        throw std::invalid_argument("composed tableaus must have the same number of qubits");
    }
    Tableau result = *this;
    std::vector<size_t> targets = iota_targets(num_qubits);
    result.inplace_scatter_append(second, targets);
    return result;
}

Tableau Tableau::inverse() const {
    require_column_major();
    size_t n = num_qubits;
    Tableau result(n);
    result.xs.xt.clear();
    result.zs.zt.clear();
    for (size_t a = 0; a < n; a++) {
        BitView txx = xs.xt[a];
        BitView txz = xs.zt[a];
        BitView tzx = zs.xt[a];
        BitView tzz = zs.zt[a];
        for (size_t b = 0; b < n; b++) {
            uint8_t in = static_cast<uint8_t>(
                uint8_t{txx.get(b)} | (uint8_t{txz.get(b)} << 1) | (uint8_t{tzx.get(b)} << 2) |
                (uint8_t{tzz.get(b)} << 3));
            uint8_t out = kInverseBlocks[in];
            result.xs.xt.set(b, a, out & 1);
            result.xs.zt.set(b, a, out & 2);
            result.zs.xt.set(b, a, out & 4);
            result.zs.zt.set(b, a, out & 8);
        }
    }
    // With all-positive signs, result(g) is +S_g; the sign of T(S_g) is then the sign T^-1 needs.
    PauliString image(n);
    std::vector<size_t> identity_map = iota_targets(n);
    for (size_t k = 0; k < n; k++) {
        accumulate_image(*this, result.xs[k], identity_map, image.ref());
        result.xs.signs[k] = image.sign;
        accumulate_image(*this, result.zs[k], identity_map, image.ref());
        result.zs.signs[k] = image.sign;
    }
    return result;
}

Tableau Tableau::raised_to(int64_t exponent) const {
    Tableau base = exponent < 0 ? inverse() : *this;
    uint64_t e = exponent < 0 ? static_cast<uint64_t>(-(exponent + 1)) + 1 : static_cast<uint64_t>(exponent);
    Tableau result(num_qubits);
    while (e) {
        if (e & 1) {
            result = result.then(base);
        }
        e >>= 1;
        if (e) {
            base = base.then(base);
        }
    }
    return result;
}

Tableau Tableau::expanded(size_t new_num_qubits) const {
    require_column_major();
    if (new_num_qubits < num_qubits) {
        throw std::invalid_argument("can't shrink a tableau");
    }
    Tableau result(new_num_qubits);
    for (size_t k = 0; k < num_qubits; k++) {
        for (size_t q = 0; q < num_qubits; q++) {
            result.xs.xt.set(k, q, xs.xt.get(k, q));
            result.xs.zt.set(k, q, xs.zt.get(k, q));
            result.zs.xt.set(k, q, zs.xt.get(k, q));
            result.zs.zt.set(k, q, zs.zt.get(k, q));
        }
        result.xs.signs[k] = xs.signs[k];
        result.zs.signs[k] = zs.signs[k];
    }
    return result;
}

void Tableau::prepend_X(size_t q) {
    zs.signs.toggle(q);
}

void Tableau::prepend_Y(size_t q) {
    xs.signs.toggle(q);
    zs.signs.toggle(q);
}

void Tableau::prepend_Z(size_t q) {
    xs.signs.toggle(q);
}

void Tableau::prepend_H(size_t q) {
    require_column_major();
    xs[q].swap_with(zs[q]);
}

void Tableau::prepend_S(size_t q) {
    require_column_major();
    xs[q].mul_with_extra_phase(zs[q], 1);
}

void Tableau::prepend_S_DAG(size_t q) {
    require_column_major();
    xs[q].mul_with_extra_phase(zs[q], 3);
}

void Tableau::prepend_SQRT_Y(size_t q) {
    prepend_H(q);
    xs.signs.toggle(q);
}

void Tableau::prepend_SQRT_Y_DAG(size_t q) {
    prepend_H(q);
    zs.signs.toggle(q);
}

void Tableau::prepend_CNOT(size_t control, size_t target) {
    require_column_major();
    xs[control] *= xs[target];
    zs[target] *= zs[control];
}

void Tableau::prepend_CZ(size_t a, size_t b) {
    require_column_major();
    xs[a] *= zs[b];
    xs[b] *= zs[a];
}

void Tableau::prepend_SWAP(size_t a, size_t b) {
    require_column_major();
    xs[a].swap_with(xs[b]);
    zs[a].swap_with(zs[b]);
}

bool Tableau::operator==(const Tableau &other) const {
    return num_qubits == other.num_qubits && layout_ == other.layout_ && xs.xt == other.xs.xt &&
           xs.zt == other.xs.zt && zs.xt == other.zs.xt && zs.zt == other.zs.zt && xs.signs == other.xs.signs &&
           zs.signs == other.zs.signs;
}

std::string Tableau::str() const {
    require_column_major();
    std::string result;
    for (size_t k = 0; k < num_qubits; k++) {
        result += "X_" + std::to_string(k) + " -> " + xs[k].str() + "\n";
    }
    for (size_t k = 0; k < num_qubits; k++) {
        result += "Z_" + std::to_string(k) + " -> " + zs[k].str() + "\n";
    }
    return result;
}

void Tableau::do_transpose() {
    xs.xt.transpose_square_in_place();
    xs.zt.transpose_square_in_place();
    zs.xt.transpose_square_in_place();
    zs.zt.transpose_square_in_place();
    layout_ = layout_ == Layout::ColumnMajor ? Layout::RowMajor : Layout::ColumnMajor;
}

TableauTransposedRaii::TableauTransposedRaii(Tableau &tableau) : tableau(tableau) {
    if (tableau.layout() != Layout::ColumnMajor) {
        throw std::logic_error("tableau is already transposed");
    }
    tableau.do_transpose();
}

TableauTransposedRaii::~TableauTransposedRaii() {
    tableau.do_transpose();
}

void TableauTransposedRaii::append_CNOT(size_t control, size_t target) {
    for (TableauHalf *h : {&tableau.xs, &tableau.zs}) {
        uint64_t *s = h->signs.u64().data();
        uint64_t *cx = h->xt[control].data();
        uint64_t *cz = h->zt[control].data();
        uint64_t *tx = h->xt[target].data();
        uint64_t *tz = h->zt[target].data();
        size_t n = h->xt.row_u64();
        for (size_t w = 0; w < n; w++) {
            s[w] ^= ~(cz[w] ^ tx[w]) & (cx[w] & tz[w]);
            cz[w] ^= tz[w];
            tx[w] ^= cx[w];
        }
    }
}

void TableauTransposedRaii::append_H(size_t q) {
    for (TableauHalf *h : {&tableau.xs, &tableau.zs}) {
        uint64_t *s = h->signs.u64().data();
        uint64_t *x = h->xt[q].data();
        uint64_t *z = h->zt[q].data();
        size_t n = h->xt.row_u64();
        for (size_t w = 0; w < n; w++) {
            std::swap(x[w], z[w]);
            s[w] ^= x[w] & z[w];
        }
    }
}

void TableauTransposedRaii::append_H_YZ(size_t q) {
    for (TableauHalf *h : {&tableau.xs, &tableau.zs}) {
        uint64_t *s = h->signs.u64().data();
        uint64_t *x = h->xt[q].data();
        uint64_t *z = h->zt[q].data();
        size_t n = h->xt.row_u64();
        for (size_t w = 0; w < n; w++) {
            s[w] ^= x[w] & ~z[w];
            x[w] ^= z[w];
        }
    }
}

void TableauTransposedRaii::append_X(size_t q) {
    for (TableauHalf *h : {&tableau.xs, &tableau.zs}) {
        h->signs.ref() ^= h->zt[q];
    }
}

std::ostream &operator<<(std::ostream &out, const Tableau &t) {
    return out << t.str();
}

}  // namespace stabsim
