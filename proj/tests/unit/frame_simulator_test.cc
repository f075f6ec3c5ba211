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
#include "stabsim/bench.h"
#include "stabsim/frame_simulator.h"
#include "stabsim/tableau_simulator.h"

using namespace stabsim;

namespace {

std::vector<GateTarget> qubits(std::initializer_list<uint32_t> qs) {
    std::vector<GateTarget> out;
    for (uint32_t q : qs) {
        out.push_back(GateTarget::qubit(q));
    }
    return out;
}

void fill_row(BitRef row, size_t bits, bool value) {
    for (size_t k = 0; k < bits; k++) {
        row.set(k, value);
    }
}

oracle::Counts popcount_histogram(const SampleTable &t) {
    oracle::Counts out;
    for (size_t s = 0; s < t.num_shots; s++) {
        size_t ones = t.bits[s].popcount();
        std::vector<bool> key(8);
        for (size_t b = 0; b < 8; b++) {
            key[b] = (std::min<size_t>(ones, 255) >> b) & 1;
        }
        out[key]++;
    }
    return out;
}

}  // namespace

TEST(FrameSimulator, InitialFrames) {
    Rng rng(1);
    FrameSimulator sim(100, 1000, 0, rng);
    sim.reset_all();
    size_t ones = 0;
    for (size_t q = 0; q < 100; q++) {
        EXPECT_FALSE(sim.x_table[q].not_zero());
        for (size_t f = 0; f < 1000; f++) {
            ones += sim.z_table.get(q, f);
        }
    }
    EXPECT_NEAR(static_cast<double>(ones) / 1e5, 0.5, 0.01);

    Rng single(2);
    FrameSimulator one(1, 1, 0, single);
    size_t z = 0;
    for (int k = 0; k < 1000; k++) {
        one.reset_all();
        z += one.z_table.get(0, 0);
        EXPECT_FALSE(one.x_table.get(0, 0));
    }
    EXPECT_NEAR(z / 1000.0, 0.5, 0.06);
}

TEST(FrameSimulator, GateRules) {
    Rng rng(3);
    FrameSimulator sim(2, 64, 0, rng);
    sim.x_table.clear();
    sim.z_table.clear();
    fill_row(sim.x_table[0], 64, true);
    sim.apply_unitary(gate_data(GateType::CNOT), qubits({0, 1}));
    EXPECT_EQ(sim.x_table[0].popcount(), 64u);
    EXPECT_EQ(sim.z_table[0].popcount(), 0u);
    EXPECT_EQ(sim.x_table[1].popcount(), 64u);
    EXPECT_EQ(sim.z_table[1].popcount(), 0u);

    sim.x_table.clear();
    fill_row(sim.x_table[0], 64, true);
    sim.apply_unitary(gate_data(GateType::H), qubits({0}));
    EXPECT_FALSE(sim.x_table[0].not_zero());
    EXPECT_EQ(sim.z_table[0].popcount(), 64u);

    sim.x_table.clear();
    sim.z_table.clear();
    for (const GateData &g : all_gates()) {
        if (g.is_unitary()) {
            sim.apply_unitary(g, g.arity == 2 ? qubits({1, 0}) : qubits({1}));
        }
    }
    EXPECT_FALSE(sim.x_table[0].not_zero() || sim.x_table[1].not_zero());
    EXPECT_FALSE(sim.z_table[0].not_zero() || sim.z_table[1].not_zero());
}

TEST(FrameSimulator, FrameRulesMatchTableauConjugation) {
    for (const GateData &g : all_gates()) {
        if (!g.is_unitary()) {
            continue;
        }
        size_t planes = 2 * g.arity;
        for (uint32_t in = 0; in < (1u << planes); in++) {
            PauliString p(g.arity);
            for (size_t j = 0; j < g.arity; j++) {
                p.set(j, pauli_from_xz((in >> (2 * j)) & 1, (in >> (2 * j + 1)) & 1));
            }
            PauliString image = g.tableau()(p);
            uint32_t out = 0;
            for (size_t r = 0; r < planes; r++) {
                out |= uint32_t(std::popcount(g.frame_rule[r] & in) & 1) << r;
            }
            uint32_t expected = 0;
            for (size_t j = 0; j < g.arity; j++) {
                expected |= uint32_t(image.xs.get(j)) << (2 * j);
                expected |= uint32_t(image.zs.get(j)) << (2 * j + 1);
            }
            EXPECT_EQ(out, expected) << g.name << " input " << in;
        }
    }
}

TEST(FrameSimulator, KernelsMatchGenericFrameRule) {
    Rng rng(4);
    for (const GateData &g : all_gates()) {
        if (!g.is_unitary()) {
            continue;
        }
        FrameSimulator sim(3, 300, 0, rng);
        for (size_t q = 0; q < 3; q++) {
            sim.x_table[q].randomize(300, rng);
            sim.z_table[q].randomize(300, rng);
        }
        BitTable x = sim.x_table;
        BitTable z = sim.z_table;
        if (g.arity == 2) {
            sim.apply_unitary(g, qubits({2, 0}));
            apply_frame_rule(g, x[2], z[2], x[0], z[0]);
        } else {
            sim.apply_unitary(g, qubits({1}));
            apply_frame_rule(g, x[1], z[1], BitRef(), BitRef());
        }
        EXPECT_EQ(sim.x_table, x) << g.name;
        EXPECT_EQ(sim.z_table, z) << g.name;
    }
}

TEST(FrameSimulator, Noise) {
    Rng rng(5);
    FrameSimulator sim(2, 1000, 0, rng);
    sim.reset_all();
    BitTable x = sim.x_table;
    BitTable z = sim.z_table;
    sim.apply_noise(gate_data(GateType::X_ERROR), 0, qubits({0, 1}));
    sim.apply_noise(gate_data(GateType::DEPOLARIZE2), 0, qubits({0, 1}));
    EXPECT_EQ(sim.x_table, x);
    EXPECT_EQ(sim.z_table, z);

    sim.apply_noise(gate_data(GateType::X_ERROR), 1, qubits({1}));
    EXPECT_EQ(sim.x_table[1].popcount(), 1000u);
    EXPECT_EQ(sim.z_table, z);

    FrameSimulator big(1000, 1000, 0, rng);
    std::vector<GateTarget> all;
    for (uint32_t q = 0; q < 1000; q++) {
        all.push_back(GateTarget::qubit(q));
    }
    big.reset_all();
    big.apply_noise(gate_data(GateType::X_ERROR), 0.01, all);
    size_t hits = 0;
    for (size_t q = 0; q < 1000; q++) {
        hits += big.x_table[q].popcount();
    }
    double sigma = std::sqrt(1e6 * 0.01 * 0.99);
    EXPECT_LT(std::abs(static_cast<double>(hits) - 1e4), 5 * sigma);
}

TEST(FrameSimulator, DepolarizingHitsAreUniform) {
    Rng rng(6);
    FrameSimulator sim(2, 20000, 0, rng);
    sim.x_table.clear();
    sim.z_table.clear();
    sim.apply_noise(gate_data(GateType::DEPOLARIZE2), 1, qubits({0, 1}));
    std::array<size_t, 16> counts{};
    for (size_t f = 0; f < 20000; f++) {
        size_t code = sim.x_table.get(0, f) | sim.z_table.get(0, f) << 1 | sim.x_table.get(1, f) << 2 |
                      sim.z_table.get(1, f) << 3;
        counts[code]++;
    }
    EXPECT_EQ(counts[0], 0u);
    oracle::Counts observed;
    oracle::Distribution expected;
    for (size_t c = 1; c < 16; c++) {
        std::vector<bool> key{bool(c & 1), bool(c & 2), bool(c & 4), bool(c & 8)};
        observed[key] = counts[c];
        expected[key] = 1.0 / 15;
    }
    EXPECT_GT(oracle::chi_square_goodness_of_fit(observed, expected), 1e-4);
}

TEST(FrameSimulator, MeasureAndReset) {
    Rng rng(7);
    FrameSimulator sim(3, 64, 3, rng);
    sim.x_table.clear();
    sim.z_table.clear();
    fill_row(sim.x_table[1], 64, true);
    fill_row(sim.z_table[1], 64, true);
    fill_row(sim.z_table[2], 64, true);
    sim.measure(0);
    sim.measure(1);
    sim.measure(2);
    EXPECT_EQ(sim.num_recorded(), 3u);
    EXPECT_FALSE(sim.flip_record[0].not_zero());
    EXPECT_EQ(sim.flip_record[1].popcount(), 64u);
    EXPECT_FALSE(sim.flip_record[2].not_zero());
    EXPECT_TRUE(sim.z_table[0].not_zero());

    FrameSimulator r(1, 10000, 0, rng);
    r.x_table.clear();
    fill_row(r.x_table[0], 10000, true);
    fill_row(r.z_table[0], 10000, true);
    r.reset(0);
    EXPECT_FALSE(r.x_table[0].not_zero());
    EXPECT_NEAR(r.z_table[0].popcount() / 1e4, 0.5, 0.02);
    r.reset(0);
    EXPECT_FALSE(r.x_table[0].not_zero());
}

TEST(FrameSimulator, NoiselessCircuitsReproduceReference) {
    Rng rng(8);
    for (const std::string &text : {gen_rep_code(5, 20, 0), std::string("R 0 1 2\nX 1\nCNOT 1 2\nH 0\nS 0\nS 0\nH 0\nM 0 1 2\nMR 1\nM 1")}) {
        Circuit c = Circuit::parse(text);
        std::vector<bool> ref = TableauSimulator::reference_sample(c, rng);
        SampleTable t = sample_measurements(c, ref, 500, rng);
        for (size_t s = 0; s < t.num_shots; s++) {
            for (size_t m = 0; m < ref.size(); m++) {
                ASSERT_EQ(t.get(s, m), ref[m]);
            }
        }
    }
}

TEST(FrameSimulator, RandomMeasurementIsUniform) {
    Rng rng(9);
    SampleTable t = sample_circuit(Circuit::parse("H 0\nM 0"), 10000, rng);
    size_t ones = 0;
    for (size_t s = 0; s < t.num_shots; s++) {
        ones += t.get(s, 0);
    }
    EXPECT_NEAR(ones / 1e4, 0.5, 0.02);
}

TEST(FrameSimulator, ShotCountsAndBatchSizes) {
    Rng rng(10);
    Circuit c = Circuit::parse("H 0\nCNOT 0 1\nX_ERROR(0.2) 1\nM 0 1");
    for (size_t batch : {1, 7, 64, 1024}) {
        SampleTable t = sample_circuit(c, 3000, rng, batch);
        ASSERT_EQ(t.num_shots, 3000u);
        ASSERT_EQ(t.num_results, 2u);
        size_t disagree = 0;
        for (size_t s = 0; s < 3000; s++) {
            disagree += t.get(s, 0) != t.get(s, 1);
        }
        EXPECT_NEAR(disagree / 3000.0, 0.2, 0.04) << batch;
    }
    EXPECT_THROW(sample_measurements(c, {false}, 10, rng), std::invalid_argument);
}

TEST(FrameSimulator, ReferenceInterchangeability) {
    Circuit c = Circuit::parse("H 0\nCNOT 0 1\nH 2\nDEPOLARIZE1(0.2) 1 2\nM 0 1 2\nCZ 1 2\nH 1\nM 1");
    Rng rng(11);
    std::vector<bool> ref_a;
    std::vector<bool> ref_b;
    do {
        ref_a = TableauSimulator::reference_sample(c, rng);
        ref_b = TableauSimulator::reference_sample(c, rng);
    } while (ref_a == ref_b);
    oracle::Counts ca;
    oracle::Counts cb;
    SampleTable ta = sample_measurements(c, ref_a, 10000, rng);
    SampleTable tb = sample_measurements(c, ref_b, 10000, rng);
    for (size_t s = 0; s < 10000; s++) {
        std::vector<bool> ka;
        std::vector<bool> kb;
        for (size_t m = 0; m < 4; m++) {
            ka.push_back(ta.get(s, m));
            kb.push_back(tb.get(s, m));
        }
        ca[ka]++;
        cb[kb]++;
    }
    EXPECT_GT(oracle::chi_square_two_sample(ca, cb), 1e-3);
}

TEST(FrameSimulator, NoisyRepetitionCodeMatchesTableauResampling) {
    Circuit c = Circuit::parse(gen_rep_code(5, 20, 0.01));
    Rng rng(12);
    SampleTable frames = sample_circuit(c, 2048, rng);
    SampleTable tableau(2048, c.num_measurements());
    for (size_t s = 0; s < 2048; s++) {
        std::vector<bool> r = TableauSimulator::sample_once(c, rng);
        for (size_t m = 0; m < r.size(); m++) {
            tableau.set(s, m, r[m]);
        }
    }
    oracle::Counts a = popcount_histogram(frames);
    oracle::Counts b = popcount_histogram(tableau);
    EXPECT_GT(a.size(), 3u);
    EXPECT_GT(oracle::chi_square_two_sample(a, b), 1e-3);
}

TEST(FrameSimulator, DetectionEvents) {
    Rng rng(13);
    Circuit noiseless = Circuit::parse(gen_rep_code(5, 10, 0, true));
    SampleTable events = sample_detection_events(noiseless, 1000, rng);
    EXPECT_EQ(events.num_results, noiseless.num_detectors());
    for (size_t s = 0; s < events.num_shots; s++) {
        ASSERT_FALSE(events.bits[s].not_zero());
    }
    Circuit noisy = Circuit::parse(gen_rep_code(5, 10, 0.05, true));
    SampleTable noisy_events = sample_detection_events(noisy, 1000, rng);
    size_t fired = 0;
    for (size_t s = 0; s < noisy_events.num_shots; s++) {
        fired += noisy_events.bits[s].popcount();
    }
    EXPECT_GT(fired, 0u);
}

TEST(FrameSimulator, OutOfRangeTargets) {
    Rng rng(14);
    FrameSimulator sim(2, 64, 1, rng);
    EXPECT_THROW(sim.measure(2), std::invalid_argument);
    EXPECT_THROW(sim.apply_unitary(gate_data(GateType::H), qubits({5})), std::invalid_argument);
}
