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

#include <gtest/gtest.h>

#include <random>

#include "stabsim/bit_buffer.h"
#include "stabsim/bit_table.h"

using namespace stabsim;

template <typename T>
class BitvecWidth : public ::testing::Test {};

template <size_t W>
struct Width {
    static constexpr size_t value = W;
};
using Widths = ::testing::Types<Width<64>, Width<128>, Width<256>, Width<512>>;
TYPED_TEST_SUITE(BitvecWidth, Widths);

TYPED_TEST(BitvecWidth, XorExamples) {
    using Buf = BasicBitBuffer<TypeParam::value>;
    Buf dst = Buf::from_bits({0, 1, 1, 0});
    xor_into(dst, Buf::from_bits({0, 0, 1, 1}));
    EXPECT_EQ(dst.str(), "0101");

    std::mt19937_64 rng(1);
    Buf x(300);
    x.randomize(rng);
    Buf y = x;
    xor_into(y, Buf(300));
    EXPECT_EQ(y, x);
    xor_into(y, x);
    EXPECT_EQ(y, Buf(300));
    EXPECT_TRUE(y.padding_is_clear());
}

TYPED_TEST(BitvecWidth, XorLengthMismatchThrows) {
    using Buf = BasicBitBuffer<TypeParam::value>;
    Buf a(10);
    Buf b(11);
    EXPECT_THROW(xor_into(a, b), std::invalid_argument);
}

TYPED_TEST(BitvecWidth, XorOrderIndependent) {
    using Buf = BasicBitBuffer<TypeParam::value>;
    std::mt19937_64 rng(2);
    std::vector<Buf> srcs;
    for (int k = 0; k < 5; k++) {
        srcs.emplace_back(777);
        srcs.back().randomize(rng);
    }
    Buf forward(777);
    Buf backward(777);
    for (size_t k = 0; k < srcs.size(); k++) {
        xor_into(forward, srcs[k]);
        xor_into(backward, srcs[srcs.size() - 1 - k]);
    }
    EXPECT_EQ(forward, backward);
}

TYPED_TEST(BitvecWidth, Popcount) {
    using Buf = BasicBitBuffer<TypeParam::value>;
    EXPECT_EQ(popcount(Buf(300)), 0u);
    Buf one(300);
    one.set(257, true);
    EXPECT_EQ(popcount(one), 1u);

    std::mt19937_64 rng(3);
    Buf r(300);
    r.randomize(rng);
    Buf complement = r;
    complement.invert_bits();
    EXPECT_TRUE(complement.padding_is_clear());
    EXPECT_EQ(popcount(r) + popcount(complement), 300u);
    complement.invert_bits();
    EXPECT_EQ(complement, r);
}

TYPED_TEST(BitvecWidth, PaddingMultipleOfWidth) {
    using Buf = BasicBitBuffer<TypeParam::value>;
    Buf b(1);
    EXPECT_EQ(b.num_bits_padded(), TypeParam::value);
    EXPECT_EQ(Buf(TypeParam::value + 1).num_bits_padded(), 2 * TypeParam::value);
    EXPECT_EQ(Buf(0).num_bits_padded(), 0u);
}

TYPED_TEST(BitvecWidth, TransposeExamples) {
    using Table = BasicBitTable<TypeParam::value>;
    Table t(2, 2);
    t.set(0, 1, true);
    Table tt = transpose_square(t);
    EXPECT_FALSE(tt.get(0, 0));
    EXPECT_FALSE(tt.get(0, 1));
    EXPECT_TRUE(tt.get(1, 0));
    EXPECT_FALSE(tt.get(1, 1));

    Table id = Table::identity(70);
    EXPECT_EQ(transpose_square(id), id);

    EXPECT_THROW(transpose_square(Table(3, 4)), std::invalid_argument);
}

TYPED_TEST(BitvecWidth, TransposeIsInvolution) {
    using Table = BasicBitTable<TypeParam::value>;
    std::mt19937_64 rng(4);
    for (size_t n : {1, 63, 64, 65, 200, 256}) {
        Table t(n, n);
        for (size_t m = 0; m < n; m++) {
            t[m].randomize(n, rng);
        }
        Table tt = transpose_square(t);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                ASSERT_EQ(tt.get(i, j), t.get(j, i)) << n << " " << i << " " << j;
            }
        }
        EXPECT_EQ(transpose_square(tt), t);
    }
}

TYPED_TEST(BitvecWidth, RectangularTransposeMatches) {
    using Table = BasicBitTable<TypeParam::value>;
    std::mt19937_64 rng(5);
    Table t(70, 130);
    for (size_t m = 0; m < 70; m++) {
        t[m].randomize(130, rng);
    }
    Table tt = t.transposed();
    ASSERT_EQ(tt.num_major(), 130u);
    ASSERT_EQ(tt.num_minor(), 70u);
    for (size_t i = 0; i < 70; i++) {
        for (size_t j = 0; j < 130; j++) {
            ASSERT_EQ(tt.get(j, i), t.get(i, j));
        }
    }
    EXPECT_EQ(tt.transposed(), t);
}

// The same seeded bit pattern must give identical logical results at every width.
TEST(BitvecWidths, ResultsIndependentOfWidth) {
    auto run = [](auto tag) {
        constexpr size_t W = decltype(tag)::value;
        std::mt19937_64 rng(6);
        BasicBitTable<W> t(100, 100);
        for (size_t m = 0; m < 100; m++) {
            t[m].randomize(100, rng);
        }
        t.transpose_square_in_place();
        BasicBitBuffer<W> acc(100);
        for (size_t m = 0; m < 100; m += 3) {
            for (size_t k = 0; k < 100; k++) {
                acc.set(k, acc.get(k) ^ t.get(m, k));
            }
        }
        return acc.str() + std::to_string(acc.popcount());
    };
    std::string base = run(Width<64>{});
    EXPECT_EQ(run(Width<128>{}), base);
    EXPECT_EQ(run(Width<256>{}), base);
    EXPECT_EQ(run(Width<512>{}), base);
}

TEST(BitProxy, ReadsAndWritesSingleBits) {
    BitBuffer b(130);
    b[129] = true;
    b[3] ^= true;
    EXPECT_TRUE(b.get(129));
    EXPECT_TRUE(b.get(3));
    EXPECT_EQ(b.popcount(), 2u);
    b[3] = b[0];
    EXPECT_FALSE(b.get(3));
}
