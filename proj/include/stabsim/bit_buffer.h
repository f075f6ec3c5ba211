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

#ifndef STABSIM_BIT_BUFFER_H
#define STABSIM_BIT_BUFFER_H

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#ifndef STABSIM_WORD_BITS
#define STABSIM_WORD_BITS 256
#endif

namespace stabsim {

/// Padding granularity (in bits) used by every bit buffer and bit table in the library.
///
/// Buffers are padded up to a multiple of this width so that bulk operations only ever touch whole
/// words. The bulk operations themselves iterate over 64-bit lanes, which the compiler widens to
/// whatever vector registers are available, so results never depend on the chosen width.
constexpr size_t kWordBits = STABSIM_WORD_BITS;
static_assert(kWordBits >= 64 && kWordBits % 64 == 0, "word width must be a positive multiple of 64");

constexpr size_t round_up_bits(size_t num_bits, size_t word_bits) {
    return (num_bits + word_bits - 1) / word_bits * word_bits;
}

static_assert(std::endian::native == std::endian::little, "bit addressing assumes little-endian words");

/// Reference to a single bit, addressed by byte so it can point into words or at a `bool`.
class BitProxy {
  public:
    BitProxy(uint64_t *word, size_t bit_index)
        : byte_(reinterpret_cast<uint8_t *>(word) + (bit_index >> 3)), shift_(static_cast<uint8_t>(bit_index & 7)) {
    }
    BitProxy(const BitProxy &) = default;
    explicit BitProxy(bool *flag) : byte_(reinterpret_cast<uint8_t *>(flag)), shift_(0) {
    }
    operator bool() const {
        return (*byte_ >> shift_) & 1;
    }
    const BitProxy &operator=(bool value) const {
        *byte_ &= static_cast<uint8_t>(~(1u << shift_));
        *byte_ |= static_cast<uint8_t>(uint8_t{value} << shift_);
        return *this;
    }
    const BitProxy &operator=(const BitProxy &other) const {
        return *this = static_cast<bool>(other);
    }
    const BitProxy &operator^=(bool value) const {
        *byte_ ^= static_cast<uint8_t>(uint8_t{value} << shift_);
        return *this;
    }
    void swap_with(BitProxy other) const {
        bool a = *this;
        bool b = other;
        *this = b;
        other = a;
    }

  private:
    uint8_t *byte_;
    uint8_t shift_;
};

/// Non-owning view of a padded run of 64-bit words.
///
/// `Word` is either `uint64_t` (mutable view, `BitRef`) or `const uint64_t` (read-only view,
/// `BitView`). Views know their padded length only; callers that care about a logical bit length
/// keep it alongside.
template <typename Word>
class BitRange {
    static_assert(std::is_same_v<std::remove_const_t<Word>, uint64_t>);
    static constexpr bool kMutable = !std::is_const_v<Word>;

  public:
    constexpr BitRange() = default;
    constexpr BitRange(Word *words, size_t num_u64) : words_(words), num_u64_(num_u64) {
    }

    operator BitRange<const uint64_t>() const {
        return {words_, num_u64_};
    }

    size_t num_u64() const {
        return num_u64_;
    }
    size_t num_bits_padded() const {
        return num_u64_ * 64;
    }
    Word *data() const {
        return words_;
    }
    std::span<Word> u64() const {
        return {words_, num_u64_};
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    bool operator[](size_t k) const
        requires(!kMutable)
    {
        return get(k);
    }
    BitProxy operator[](size_t k) const
        requires kMutable
    {
        return {words_ + (k >> 6), k & 63};
    }
    void set(size_t k, bool value) const
        requires kMutable
    {
        uint64_t mask = uint64_t{1} << (k & 63);
        words_[k >> 6] = value ? (words_[k >> 6] | mask) : (words_[k >> 6] & ~mask);
    }
    void toggle(size_t k) const
        requires kMutable
    {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    const BitRange &operator^=(BitRange<const uint64_t> other) const
        requires kMutable
    {
        check_same_size(other.num_u64());
        const uint64_t *src = other.data();
        for (size_t k = 0; k < num_u64_; k++) {
            words_[k] ^= src[k];
        }
        return *this;
    }
    const BitRange &operator&=(BitRange<const uint64_t> other) const
        requires kMutable
    {
        check_same_size(other.num_u64());
        const uint64_t *src = other.data();
        for (size_t k = 0; k < num_u64_; k++) {
            words_[k] &= src[k];
        }
        return *this;
    }
    const BitRange &operator|=(BitRange<const uint64_t> other) const
        requires kMutable
    {
        check_same_size(other.num_u64());
        const uint64_t *src = other.data();
        for (size_t k = 0; k < num_u64_; k++) {
            words_[k] |= src[k];
        }
        return *this;
    }
    void overwrite_with(BitRange<const uint64_t> other) const
        requires kMutable
    {
        check_same_size(other.num_u64());
        std::copy(other.data(), other.data() + num_u64_, words_);
    }
    void swap_with(BitRange<uint64_t> other) const
        requires kMutable
    {
        check_same_size(other.num_u64());
        uint64_t *dst = other.data();
        for (size_t k = 0; k < num_u64_; k++) {
            std::swap(words_[k], dst[k]);
        }
    }
    void clear() const
        requires kMutable
    {
        std::fill(words_, words_ + num_u64_, uint64_t{0});
    }

    /// Fills the first `num_bits` bits with uniform random bits and zeroes the rest.
    void randomize(size_t num_bits, std::mt19937_64 &rng) const
        requires kMutable
    {
        size_t full = num_bits >> 6;
        for (size_t k = 0; k < full; k++) {
            words_[k] = rng();
        }
        if (num_bits & 63) {
            words_[full] = rng() & ((uint64_t{1} << (num_bits & 63)) - 1);
            full++;
        }
        std::fill(words_ + full, words_ + num_u64_, uint64_t{0});
    }

    size_t popcount() const {
        size_t total = 0;
        for (size_t k = 0; k < num_u64_; k++) {
            total += std::popcount(words_[k]);
        }
        return total;
    }
    bool not_zero() const {
        uint64_t acc = 0;
        for (size_t k = 0; k < num_u64_; k++) {
            acc |= words_[k];
        }
        return acc != 0;
    }
    bool operator==(BitRange<const uint64_t> other) const {
        return num_u64_ == other.num_u64() && std::equal(words_, words_ + num_u64_, other.data());
    }

    template <typename F>
    void for_each_set_bit(F &&callback) const {
        for (size_t w = 0; w < num_u64_; w++) {
            uint64_t v = words_[w];
            while (v) {
                callback((w << 6) | std::countr_zero(v));
                v &= v - 1;
            }
        }
    }

  private:
    void check_same_size(size_t other_u64) const {
        if (other_u64 != num_u64_) {
            throw std::invalid_argument(
                "bit range size mismatch: " + std::to_string(num_u64_) + " vs " + std::to_string(other_u64) +
                " words");
        }
    }

    Word *words_ = nullptr;
    size_t num_u64_ = 0;
};

using BitRef = BitRange<uint64_t>;
using BitView = BitRange<const uint64_t>;

/// Owning, word-padded bit buffer. Padding bits beyond `num_bits()` are kept zero.
template <size_t W>
class BasicBitBuffer {
    static_assert(W >= 64 && W % 64 == 0);

  public:
    static constexpr size_t kPadding = W;

    BasicBitBuffer() = default;
    explicit BasicBitBuffer(size_t num_bits) : num_bits_(num_bits), words_(round_up_bits(num_bits, W) / 64, 0) {
    }

    static BasicBitBuffer from_bits(const std::vector<bool> &bits) {
        BasicBitBuffer result(bits.size());
        for (size_t k = 0; k < bits.size(); k++) {
            result.set(k, bits[k]);
        }
        return result;
    }

    size_t num_bits() const {
        return num_bits_;
    }
    size_t num_u64() const {
        return words_.size();
    }
    size_t num_bits_padded() const {
        return words_.size() * 64;
    }

    BitRef ref() {
        return {words_.data(), words_.size()};
    }
    BitView view() const {
        return {words_.data(), words_.size()};
    }
    operator BitView() const {
        return view();
    }
    std::span<uint64_t> u64() {
        return words_;
    }
    std::span<const uint64_t> u64() const {
        return words_;
    }

    bool get(size_t k) const {
        return view().get(k);
    }
    bool operator[](size_t k) const {
        return get(k);
    }
    BitProxy operator[](size_t k) {
        return ref()[k];
    }
    void set(size_t k, bool value) {
        ref().set(k, value);
    }
    void toggle(size_t k) {
        ref().toggle(k);
    }

    BasicBitBuffer &operator^=(const BasicBitBuffer &other) {
        check_same_length(other);
        ref() ^= other.view();
        return *this;
    }
    BasicBitBuffer &operator&=(const BasicBitBuffer &other) {
        check_same_length(other);
        ref() &= other.view();
        return *this;
    }
    BasicBitBuffer &operator|=(const BasicBitBuffer &other) {
        check_same_length(other);
        ref() |= other.view();
        return *this;
    }

    size_t popcount() const {
        return view().popcount();
    }
    bool not_zero() const {
        return view().not_zero();
    }
    void clear() {
        ref().clear();
    }
    void randomize(std::mt19937_64 &rng) {
        ref().randomize(num_bits_, rng);
    }
    /// Complements the logical bits; padding stays zero.
    void invert_bits() {
        for (auto &w : words_) {
            w = ~w;
        }
        mask_padding();
    }

    bool operator==(const BasicBitBuffer &other) const {
        return num_bits_ == other.num_bits_ && words_ == other.words_;
    }

    std::vector<bool> to_bits() const {
        std::vector<bool> result(num_bits_);
        for (size_t k = 0; k < num_bits_; k++) {
            result[k] = get(k);
        }
        return result;
    }
    std::string str() const {
        std::string result;
        result.reserve(num_bits_);
        for (size_t k = 0; k < num_bits_; k++) {
            result.push_back(get(k) ? '1' : '0');
        }
        return result;
    }

    /// True when every padding bit is zero. Exposed for invariant checks.
    bool padding_is_clear() const {
        for (size_t k = num_bits_; k < num_bits_padded(); k++) {
            if (get(k)) {
                return false;
            }
        }
        return true;
    }

  private:
    void check_same_length(const BasicBitBuffer &other) const {
        if (other.num_bits_ != num_bits_) {
            throw std::invalid_argument(
                "bit buffer length mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
        }
    }
    void mask_padding() {
        size_t k = num_bits_ >> 6;
        if (k < words_.size() && (num_bits_ & 63)) {
            words_[k] &= (uint64_t{1} << (num_bits_ & 63)) - 1;
            k++;
        }
        for (; k < words_.size(); k++) {
            words_[k] = 0;
        }
    }

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

using BitBuffer = BasicBitBuffer<kWordBits>;

/// dst[i] ^= src[i] for every bit. Lengths must match.
template <size_t W>
void xor_into(BasicBitBuffer<W> &dst, const BasicBitBuffer<W> &src) {
    dst ^= src;
}

template <size_t W>
size_t popcount(const BasicBitBuffer<W> &b) {
    return b.popcount();
}

}  // namespace stabsim

#endif
