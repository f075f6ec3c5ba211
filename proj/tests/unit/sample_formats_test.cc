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

#include "stabsim/sample_formats.h"

using namespace stabsim;

namespace {

SampleTable table_of(const std::vector<std::vector<bool>> &shots) {
    size_t results = shots.empty() ? 0 : shots[0].size();
    SampleTable t(shots.size(), results);
    for (size_t s = 0; s < shots.size(); s++) {
        for (size_t r = 0; r < results; r++) {
            t.set(s, r, shots[s][r]);
        }
    }
    return t;
}

std::string bytes(std::initializer_list<int> values) {
    std::string out;
    for (int v : values) {
        out.push_back(static_cast<char>(v));
    }
    return out;
}

}  // namespace

TEST(Format01, Fixtures) {
    EXPECT_EQ(format_samples(table_of({{1, 0, 1}}), SampleFormat::Dense01), "101\n");
    EXPECT_EQ(format_samples(SampleTable(0, 5), SampleFormat::Dense01), "");
    EXPECT_EQ(format_samples(table_of({{1}, {0}}), SampleFormat::Dense01), "1\n0\n");
    EXPECT_EQ(format_samples(SampleTable(2, 0), SampleFormat::Dense01), "\n\n");
}

TEST(FormatB8, Fixtures) {
    EXPECT_EQ(format_samples(table_of({{1, 0, 0, 0, 0, 0, 0, 0, 1}}), SampleFormat::B8), bytes({0x01, 0x01}));
    EXPECT_EQ(format_samples(table_of({{0, 0, 0, 0, 0, 0, 0, 0}}), SampleFormat::B8), bytes({0x00}));
    EXPECT_EQ(format_samples(table_of({{1, 1, 1, 1, 1, 1, 1, 1}}), SampleFormat::B8), bytes({0xFF}));
    EXPECT_EQ(format_samples(table_of({{0, 1, 0}, {1, 1, 0}}), SampleFormat::B8), bytes({0x02, 0x03}));
}

TEST(FormatHits, Fixtures) {
    EXPECT_EQ(format_samples(table_of({{0, 1, 0, 1}}), SampleFormat::Hits), "1,3\n");
    EXPECT_EQ(format_samples(table_of({{0, 0}, {1, 0}}), SampleFormat::Hits), "\n0\n");
}

TEST(FormatR8, Fixtures) {
    EXPECT_EQ(format_samples(table_of({{0, 0, 0}}), SampleFormat::R8), bytes({0x03}));
    EXPECT_EQ(format_samples(SampleTable(1, 300), SampleFormat::R8), bytes({0xFF, 0x2D}));
    EXPECT_EQ(format_samples(table_of({{1, 0, 1}}), SampleFormat::R8), bytes({0x00, 0x01, 0x00}));
    EXPECT_EQ(format_samples(SampleTable(1, 255), SampleFormat::R8), bytes({0xFF, 0x00}));
    EXPECT_EQ(format_samples(SampleTable(1, 0), SampleFormat::R8), bytes({0x00}));
}

TEST(Formats, LengthsAndR8GapSums) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; k++) {
        size_t results = rng() % 700;
        SampleTable t(1, results);
        t.bits[0].randomize(results, rng);
        if (rng() % 3 == 0) {
            t.bits[0].clear();
        }
        EXPECT_EQ(format_samples(t, SampleFormat::B8).size(), (results + 7) / 8);
        std::string r8 = format_samples(t, SampleFormat::R8);
        size_t positions = 0;
        for (unsigned char c : r8) {
            positions += c == 255 ? 255 : c + 1;
        }
        EXPECT_EQ(positions, results + 1);
    }
}

TEST(Formats, RandomRoundTrips) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 1000; k++) {
        size_t shots = rng() % 20;
        size_t results = rng() % 600;
        SampleTable t(shots, results);
        int density = static_cast<int>(rng() % 4);
        for (size_t s = 0; s < shots; s++) {
            t.bits[s].randomize(results, rng);
            for (int d = 0; d < density; d++) {
                BitBuffer mask(results);
                mask.randomize(rng);
                t.bits[s] &= mask.view();
            }
        }
        for (SampleFormat f : {SampleFormat::Dense01, SampleFormat::B8, SampleFormat::Hits, SampleFormat::R8}) {
            SampleTable back = read_samples(format_samples(t, f), f, results);
            if (f == SampleFormat::B8 && results == 0) {
                EXPECT_EQ(back.num_shots, 0u);
                continue;
            }
            ASSERT_EQ(back, t) << sample_format_name(f) << " " << shots << "x" << results;
        }
    }
}

TEST(Formats, NamesAndErrors) {
    EXPECT_EQ(parse_sample_format("01"), SampleFormat::Dense01);
    EXPECT_EQ(parse_sample_format("b8"), SampleFormat::B8);
    EXPECT_EQ(parse_sample_format("hits"), SampleFormat::Hits);
    EXPECT_EQ(parse_sample_format("r8"), SampleFormat::R8);
    EXPECT_EQ(sample_format_name(SampleFormat::R8), "r8");
    EXPECT_THROW(parse_sample_format("b9"), std::invalid_argument);
    EXPECT_THROW(read_samples("10\n", SampleFormat::Dense01, 3), std::invalid_argument);
    EXPECT_THROW(read_samples("1x1\n", SampleFormat::Dense01, 3), std::invalid_argument);
    EXPECT_THROW(read_samples("5\n", SampleFormat::Hits, 3), std::invalid_argument);
    EXPECT_THROW(read_samples(bytes({0x05}), SampleFormat::R8, 3), std::invalid_argument);
    EXPECT_THROW(read_samples(bytes({0x01}), SampleFormat::B8, 9), std::invalid_argument);
}

TEST(Detectors, CombineRows) {
    BitTable flips(3, 4);
    flips.set(0, 1, true);
    flips.set(1, 1, true);
    flips.set(2, 3, true);
    BitTable events = combine_rows(flips, {{0}, {0, 1}, {1, 2}, {}});
    EXPECT_TRUE(events.get(0, 1));
    EXPECT_FALSE(events.get(1, 1));
    EXPECT_TRUE(events.get(2, 1));
    EXPECT_TRUE(events.get(2, 3));
    EXPECT_FALSE(events[3].not_zero());
    EXPECT_THROW(combine_rows(flips, {{3}}), std::invalid_argument);
}

TEST(Detectors, EventsFromShotMajorFlips) {
    SampleTable flips = table_of({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    SampleTable events = detector_events(flips, {{0}, {0, 1}, {2}});
    EXPECT_EQ(events, table_of({{0, 0, 0}, {1, 1, 0}, {1, 0, 0}}));
}

TEST(Detectors, ShotsFromResultMajor) {
    BitTable rm(2, 100);
    rm.set(1, 70, true);
    SampleTable t = shots_from_result_major(rm, 80);
    EXPECT_EQ(t.num_shots, 80u);
    EXPECT_EQ(t.num_results, 2u);
    EXPECT_TRUE(t.get(70, 1));
    EXPECT_EQ(t.bits[70].popcount(), 1u);
}
