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

#ifndef STABSIM_BIT_TABLE_H
#define STABSIM_BIT_TABLE_H

#include <string>

#include "stabsim/bit_buffer.h"

namespace stabsim {

/// Transposes a 64x64 bit block held as 64 words (word r = row r, bit c = column c).
template <size_t J, uint64_t Mask>
inline void transpose_block64_step(uint64_t *rows) {
    for (size_t base = 0; base < 64; base += 2 * J) {
        for (size_t k = base; k < base + J; k++) {
            uint64_t t = ((rows[k] >> J) ^ rows[k + J]) & Mask;
            rows[k] ^= t << J;
            rows[k + J] ^= t;
        }
    }
}

inline void transpose_block64(uint64_t *rows) {
    transpose_block64_step<32, 0x00000000FFFFFFFFULL>(rows);
    transpose_block64_step<16, 0x0000FFFF0000FFFFULL>(rows);
    transpose_block64_step<8, 0x00FF00FF00FF00FFULL>(rows);
    transpose_block64_step<4, 0x0F0F0F0F0F0F0F0FULL>(rows);
    transpose_block64_step<2, 0x3333333333333333ULL>(rows);
    transpose_block64_step<1, 0x5555555555555555ULL>(rows);
}

/// Two dimensional table of bits stored as `num_major` contiguous rows of `num_minor` bits.
///
/// Both dimensions are padded up to a multiple of `W`; padding is zero and invisible to callers.
/// Bit (m, k) is bit k of row m.
template <size_t W>
class BasicBitTable {
  public:
    BasicBitTable() = default;
    BasicBitTable(size_t num_major, size_t num_minor)
        : num_major_(num_major),
          num_minor_(num_minor),
          major_padded_(round_up_bits(num_major, W)),
          row_u64_(round_up_bits(num_minor, W) / 64),
          data_(major_padded_ * row_u64_, 0) {
    }

    static BasicBitTable identity(size_t n) {
        BasicBitTable result(n, n);
        for (size_t k = 0; k < n; k++) {
            result.set(k, k, true);
        }
        return result;
    }

    size_t num_major() const {
        return num_major_;
    }
    size_t num_minor() const {
        return num_minor_;
    }
    size_t row_u64() const {
        return row_u64_;
    }
    size_t num_major_padded() const {
        return major_padded_;
    }

    BitRef row(size_t m) {
        return {data_.data() + m * row_u64_, row_u64_};
    }
    BitView row(size_t m) const {
        return {data_.data() + m * row_u64_, row_u64_};
    }
    BitRef operator[](size_t m) {
        return row(m);
    }
    BitView operator[](size_t m) const {
        return row(m);
    }

    bool get(size_t major, size_t minor) const {
        return row(major).get(minor);
    }
    void set(size_t major, size_t minor, bool value) {
        row(major).set(minor, value);
    }

    void clear() {
        std::fill(data_.begin(), data_.end(), uint64_t{0});
    }

    bool operator==(const BasicBitTable &other) const {
        return num_major_ == other.num_major_ && num_minor_ == other.num_minor_ && data_ == other.data_;
    }

    /// Returns the transpose: out(i, j) == this(j, i).
    BasicBitTable transposed() const {
        BasicBitTable out(num_minor_, num_major_);
        uint64_t block[64];
        size_t major_blocks = major_padded_ / 64;
        for (size_t bi = 0; bi < major_blocks; bi++) {
            for (size_t bj = 0; bj < row_u64_; bj++) {
                for (size_t r = 0; r < 64; r++) {
                    block[r] = data_[(bi * 64 + r) * row_u64_ + bj];
                }
                transpose_block64(block);
                for (size_t r = 0; r < 64; r++) {
                    out.data_[(bj * 64 + r) * out.row_u64_ + bi] = block[r];
                }
            }
        }
        return out;
    }

    /// Transposes a square table in place.
    void transpose_square_in_place() {
        require_square();
        size_t blocks = row_u64_;
        uint64_t a[64];
        uint64_t b[64];
        for (size_t bi = 0; bi < blocks; bi++) {
            for (size_t bj = bi; bj < blocks; bj++) {
                for (size_t r = 0; r < 64; r++) {
                    a[r] = data_[(bi * 64 + r) * row_u64_ + bj];
                    b[r] = data_[(bj * 64 + r) * row_u64_ + bi];
                }
                transpose_block64(a);
                if (bi != bj) {
                    transpose_block64(b);
                }
                for (size_t r = 0; r < 64; r++) {
                    data_[(bj * 64 + r) * row_u64_ + bi] = a[r];
                    if (bi != bj) {
                        data_[(bi * 64 + r) * row_u64_ + bj] = b[r];
                    }
                }
            }
        }
    }

    std::string str() const {
        std::string result;
        for (size_t m = 0; m < num_major_; m++) {
            for (size_t k = 0; k < num_minor_; k++) {
                result.push_back(get(m, k) ? '1' : '.');
            }
            result.push_back('\n');
        }
        return result;
    }

  private:
    void require_square() const {
        if (num_major_ != num_minor_) {
            throw std::invalid_argument(
                "square transpose of a " + std::to_string(num_major_) + "x" + std::to_string(num_minor_) + " table");
        }
    }

    size_t num_major_ = 0;
    size_t num_minor_ = 0;
    size_t major_padded_ = 0;
    size_t row_u64_ = 0;
    std::vector<uint64_t> data_;
};

using BitTable = BasicBitTable<kWordBits>;

/// Returns the transpose of a square table. Throws std::invalid_argument if the table isn't square.
template <size_t W>
BasicBitTable<W> transpose_square(const BasicBitTable<W> &t) {
    BasicBitTable<W> out = t;
    out.transpose_square_in_place();
    return out;
}

}  // namespace stabsim

#endif
