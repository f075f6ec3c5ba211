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

#include "stabsim/bench.h"
#include "stabsim/frame_simulator.h"
#include "stabsim/tableau_simulator.h"

using namespace stabsim;

TEST(Bench, Deviation) {
    BenchResult r;
    r.measured_nanos = 100;
    r.reference_nanos = 10;
    EXPECT_DOUBLE_EQ(r.deviation_db(), 10);
    r.measured_nanos = 10 * std::pow(10, 0.1);
    EXPECT_NEAR(r.deviation_db(), 1, 1e-12);
    r.measured_nanos = 1;
    EXPECT_DOUBLE_EQ(r.deviation_db(), -10);
}

TEST(Bench, FormatMarksDeviation) {
    BenchResult fast{"fast", 1, 10, "", 0};
    BenchResult even{"even", 10, 10, "Paulis", 1e4};
    BenchResult slow{"slow", 1e6, 1, "", 0};
    std::string text = format_bench_results({fast, even, slow});
    std::istringstream in(text);
    std::string l1;
    std::string l2;
    std::string l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    size_t zero = l2.find('*');
    ASSERT_NE(zero, std::string::npos);
    EXPECT_EQ(l1.find('*'), zero - 10);
    EXPECT_EQ(l3.find('*'), zero + 20);
    EXPECT_NE(l1.find('|'), std::string::npos);
    EXPECT_NE(l2.find("Paulis"), std::string::npos);
    EXPECT_NE(l3.find("slow"), std::string::npos);
}

TEST(Bench, TimingAndRegistry) {
    std::vector<BenchResult> r = run_benchmarks("empty", 0.02);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].name, "empty");
    EXPECT_LT(r[0].measured_nanos, 50);
    EXPECT_GT(r[0].reference_nanos, 0);
    EXPECT_GT(benchmark_registry().size(), 5u);
    std::vector<BenchResult> custom = run_benchmarks("empty", 0.01, {{"empty", 123}});
    EXPECT_EQ(custom[0].reference_nanos, 123);

    double count = 0;
    double nanos = time_per_call([&] { count += 1; }, 0.01);
    EXPECT_GT(count, 10);
    EXPECT_GT(nanos, 0);
}

TEST(Bench, ReferenceFile) {
    auto refs = parse_bench_references(R"({"a": 1.5, "b": 20})");
    EXPECT_EQ(refs.size(), 2u);
    EXPECT_EQ(refs["a"], 1.5);
    EXPECT_THROW(parse_bench_references("{"), std::exception);
}

TEST(Bench, GeneratorsProduceRunnableCircuits) {
    Rng rng(1);
    for (const std::string &text : {
             gen_rep_code(5, 20, 0.01),
             gen_rep_code(3, 2, 0.1, true),
             gen_random_circuit(4, 4, 1),
             gen_random_circuit(50, 10, 2),
             gen_surface_like(3, 3, 0.001),
         }) {
        Circuit c = Circuit::parse(text);
        EXPECT_GT(c.num_measurements(), 0u);
        TableauSimulator::sample_once(c, rng);
        sample_circuit(c, 10, rng);
    }
}

TEST(Bench, RandomCircuitRecipe) {
    Circuit c = Circuit::parse(gen_random_circuit(100, 3, 7));
    EXPECT_EQ(c.num_qubits(), 100u);
    size_t measured = 0;
    size_t single = 0;
    c.for_each_flat([&](const Instruction &inst) {
        if (inst.gate->type == GateType::M) {
            measured += inst.targets.size();
        }
        if (inst.gate->type == GateType::H || inst.gate->type == GateType::S || inst.gate->type == GateType::I) {
            single += inst.targets.size();
        }
    });
    EXPECT_EQ(measured, 3u * 5);
    EXPECT_GE(single, 300u);
}

TEST(Bench, SurfaceLikeIsDeterministicAfterFirstRound) {
    Circuit c = Circuit::parse(gen_surface_like(3, 3, 0.001));
    TableauSimulator sim(c.num_qubits(), Rng(2));
    sim.noise_enabled = false;
    size_t round = 0;
    size_t checked = 0;
    c.for_each_flat([&](const Instruction &inst) {
        if (inst.gate->type == GateType::MR) {
            round++;
            for (GateTarget t : inst.targets) {
                if (round > 1) {
                    EXPECT_TRUE(sim.is_deterministic_z(t.value())) << round << " " << t.value();
                    checked++;
                }
            }
        }
        sim.do_instruction(inst);
    });
    EXPECT_EQ(round, 3u);
    EXPECT_GT(checked, 0u);
    Rng rng(3);
    SampleTable events = sample_detection_events(Circuit::parse(gen_surface_like(3, 3, 0)), 100, rng);
    for (size_t s = 0; s < events.num_shots; s++) {
        EXPECT_FALSE(events.bits[s].not_zero());
    }
}

TEST(Bench, DeterministicMeasurementTiming) {
    double t = time_deterministic_measurement(256, 0.02, 1);
    EXPECT_GT(t, 0);
}
