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

#include <cmath>

#include "oracle.h"
#include "stabsim/entropy.h"

using namespace stabsim;

namespace {

bool within_sigmas(double hits, double n, double p, double sigmas) {
    double sd = std::sqrt(n * p * (1 - p));
    return std::abs(hits - n * p) <= sigmas * sd + 1e-9;
}

oracle::Counts two_bins(size_t hits, size_t n) {
    return {{{true}, hits}, {{false}, n - hits}};
}

}  // namespace

TEST(ProbabilitySplit, Examples) {
    ProbabilitySplit s = ProbabilitySplit::of(0.3);
    EXPECT_EQ(s.trunc_numerator, 76u);
    EXPECT_EQ(s.p_trunc, 0.296875);
    EXPECT_NEAR(s.p_refine, (0.3 - 0.296875) / (1 - 0.296875), 1e-15);
    EXPECT_NEAR(s.p_refine, 0.004444, 1e-6);

    ProbabilitySplit exact = ProbabilitySplit::of(76.0 / 256);
    EXPECT_EQ(exact.p_refine, 0.0);
    EXPECT_EQ(ProbabilitySplit::of(1).p_trunc, 1.0);
    EXPECT_EQ(ProbabilitySplit::of(1).p_refine, 0.0);
    EXPECT_EQ(ProbabilitySplit::of(0).p_trunc, 0.0);
}

TEST(ProbabilitySplit, CompositionLaw) {
    Rng rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 10000; k++) {
        double p = u(rng);
        ProbabilitySplit s = ProbabilitySplit::of(p);
        ASSERT_LE(s.p_trunc, p);
        ASSERT_GE(s.p_refine, 0);
        ASSERT_LT(s.p_refine, 1 / (256 * (1 - s.p_trunc)));
        double composed = 1 - (1 - s.p_trunc) * (1 - s.p_refine);
        ASSERT_LE(std::abs(composed - p), 1e-12 * p);
    }
}

TEST(Geometric, EdgeCases) {
    Rng rng(2);
    EXPECT_TRUE(sample_hits_geometric(1000, 0, rng).empty());
    std::vector<uint64_t> all = sample_hits_geometric(50, 1, rng);
    ASSERT_EQ(all.size(), 50u);
    for (uint64_t k = 0; k < 50; k++) {
        EXPECT_EQ(all[k], k);
    }
    EXPECT_TRUE(sample_hits_geometric(0, 0.5, rng).empty());
}

TEST(Geometric, HitsAscendingAndInRange) {
    Rng rng(3);
    std::vector<uint64_t> hits = sample_hits_geometric(100000, 0.05, rng);
    for (size_t k = 1; k < hits.size(); k++) {
        ASSERT_LT(hits[k - 1], hits[k]);
    }
    ASSERT_LT(hits.back(), 100000u);
}

TEST(Geometric, HitRate) {
    Rng rng(4);
    std::vector<uint64_t> hits = sample_hits_geometric(10000000, 0.001, rng);
    EXPECT_TRUE(within_sigmas(static_cast<double>(hits.size()), 1e7, 0.001, 5)) << hits.size();
}

TEST(Geometric, GapDistribution) {
    // Gaps between hits follow Geometric(p) on {0, 1, ...}.
    Rng rng(5);
    double p = 0.2;
    std::vector<uint64_t> hits = sample_hits_geometric(2000000, p, rng);
    oracle::Counts observed;
    oracle::Distribution expected;
    for (size_t k = 0; k < 20; k++) {
        expected[{bool(k & 1), bool(k & 2), bool(k & 4), bool(k & 8), bool(k & 16)}] = std::pow(1 - p, k) * p;
    }
    expected[{true, true, true, true, true}] = std::pow(1 - p, 20);
    uint64_t prev = 0;
    bool first = true;
    for (uint64_t h : hits) {
        uint64_t gap = first ? h : h - prev - 1;
        first = false;
        prev = h;
        size_t k = std::min<uint64_t>(gap, 31);
        if (k >= 20) {
            k = 31;
        }
        observed[{bool(k & 1), bool(k & 2), bool(k & 4), bool(k & 8), bool(k & 16)}]++;
    }
    EXPECT_GT(oracle::chi_square_goodness_of_fit(observed, expected), 1e-3);
}

TEST(Hybrid, HitRateAndPadding) {
    Rng rng(6);
    BitBuffer buf(10000000 + 3);
    fill_bernoulli_hybrid(buf.ref(), 10000000, 0.3, rng);
    EXPECT_TRUE(within_sigmas(static_cast<double>(buf.popcount()), 1e7, 0.3, 5)) << buf.popcount();
    EXPECT_FALSE(buf.get(10000000));
    EXPECT_FALSE(buf.get(10000002));
    EXPECT_TRUE(buf.padding_is_clear());
}

TEST(Hybrid, AdjacentBitsIndependent) {
    Rng rng(7);
    size_t n = 1000000;
    BitBuffer buf(n);
    fill_bernoulli_hybrid(buf.ref(), n, 0.3, rng);
    size_t both = 0;
    for (size_t k = 0; k + 1 < n; k++) {
        both += buf.get(k) && buf.get(k + 1);
    }
    EXPECT_TRUE(within_sigmas(static_cast<double>(both), n - 1.0, 0.09, 6));
}

TEST(Hybrid, AgreesWithGeometric) {
    for (double p : {0.001, 0.05, 0.3, 0.45}) {
        Rng rng(8);
        size_t n = 1000000;
        BitBuffer a(n);
        BitBuffer b(n);
        fill_bernoulli_geometric(a.ref(), n, p, rng);
        fill_bernoulli_hybrid(b.ref(), n, p, rng);
        EXPECT_GT(oracle::chi_square_two_sample(two_bins(a.popcount(), n), two_bins(b.popcount(), n)), 1e-3) << p;
    }
}

TEST(BiasedRandomize, AllPaths) {
    Rng rng(9);
    size_t n = 2000000;
    for (double p : {0.0, 0.001, 0.019, 0.02, 0.3, 0.5, 0.51, 0.7, 0.999, 1.0}) {
        BitBuffer buf(n + 5);
        buf.invert_bits();
        biased_randomize_bits(buf.ref(), n, p, rng);
        EXPECT_TRUE(within_sigmas(static_cast<double>(buf.popcount()), static_cast<double>(n), p, 5)) << p;
        EXPECT_FALSE(buf.get(n)) << p;
        EXPECT_TRUE(buf.padding_is_clear());
    }
}

TEST(Entropy, SeedsReproduce) {
    Rng a = make_rng(42);
    Rng b = make_rng(42);
    EXPECT_EQ(sample_hits_geometric(100000, 0.01, a), sample_hits_geometric(100000, 0.01, b));
    BitBuffer x(5000);
    BitBuffer y(5000);
    fill_bernoulli_hybrid(x.ref(), 5000, 0.3, a);
    fill_bernoulli_hybrid(y.ref(), 5000, 0.3, b);
    EXPECT_EQ(x, y);
    Rng c = make_rng(43);
    EXPECT_NE(sample_hits_geometric(100000, 0.01, c), sample_hits_geometric(100000, 0.01, a));
}

TEST(Entropy, UniformOpenClosedRange) {
    Rng rng(10);
    for (int k = 0; k < 100000; k++) {
        double u = uniform_open_closed(rng);
        ASSERT_GT(u, 0.0);
        ASSERT_LE(u, 1.0);
    }
}
