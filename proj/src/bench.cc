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

#include "stabsim/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "stabsim/circuit.h"
#include "stabsim/entropy.h"
#include "stabsim/frame_simulator.h"
#include "stabsim/pauli_string.h"
#include "stabsim/tableau_simulator.h"

namespace stabsim {

namespace {

std::string qubit_list(size_t begin, size_t end, size_t step = 1) {
    std::string out;
    for (size_t q = begin; q < end; q += step) {
        out += " " + std::to_string(q);
    }
    return out;
}

std::string prob_text(double p) {
    std::ostringstream s;
    s << p;
    return s.str();
}

void bench_empty(BenchRun &run) {
    run.go([]() {}).goal_nanos(0.5);
}

void bench_pauli_mul(BenchRun &run) {
    size_t n = 10000;
    Rng rng(1);
    PauliString p1 = PauliString::random(n, rng);
    PauliString p2 = PauliString::random(n, rng);
    uint32_t acc = 0;
    run.go([&]() {
           acc += p1.ref().mul_inplace_with_phase(p2.view());
       })
        .goal_nanos(400)
        .show_rate("Paulis", static_cast<double>(n));
    if (acc == 0xFFFFFFFF) {
        std::puts("");
    }
}

void bench_prepend_cnot(BenchRun &run) {
    Tableau t(1000);
    run.go([&]() {
           t.prepend_CNOT(0, 1);
       })
        .goal_nanos(150)
        .show_rate("gates", 1);
}

void bench_random_measure(BenchRun &run) {
    TableauSimulator sim(256, Rng(2));
    for (size_t q = 0; q < 256; q++) {
        sim.h(q);
    }
    for (size_t q = 0; q + 1 < 256; q++) {
        sim.cnot(q, q + 1);
    }
    run.go([&]() {
           sim.h(0);
           sim.measure(0);
           if (sim.measurement_record.size() > 4096) {
               sim.measurement_record.clear();
           }
       })
        .goal_nanos(50000)
        .show_rate("measurements", 1);
}

void bench_det_measure(BenchRun &run, size_t n) {
    TableauSimulator sim(n, Rng(3));
    Rng rng(4);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (size_t k = 0; k < 4 * n; k++) {
        size_t a = pick(rng);
        size_t b = pick(rng);
        if (a != b) {
            sim.cnot(a, b);
        }
    }
    size_t q = 0;
    run.go([&]() {
           sim.measure(q);
           q = q + 1 == n ? 0 : q + 1;
           if (sim.measurement_record.size() > 4096) {
               sim.measurement_record.clear();
           }
       })
        .goal_nanos(static_cast<double>(n) / 32)
        .show_rate("measurements", 1);
}

void bench_det_measure_1k(BenchRun &run) {
    bench_det_measure(run, 1024);
}

void bench_det_measure_4k(BenchRun &run) {
    bench_det_measure(run, 4096);
}

void bench_transpose(BenchRun &run) {
    BitTable t(1024, 1024);
    Rng rng(5);
    for (size_t k = 0; k < 1024; k++) {
        t[k].randomize(1024, rng);
    }
    run.go([&]() {
           t.transpose_square_in_place();
       })
        .goal_nanos(90000)
        .show_rate("bits", 1024.0 * 1024.0);
}

void bench_hybrid(BenchRun &run) {
    BitBuffer b(1 << 20);
    Rng rng(6);
    run.go([&]() {
           fill_bernoulli_hybrid(b.ref(), b.num_bits(), 0.3, rng);
       })
        .goal_nanos(1.5e6)
        .show_rate("bits", static_cast<double>(b.num_bits()));
}

void bench_geometric(BenchRun &run) {
    BitBuffer b(1 << 20);
    Rng rng(7);
    run.go([&]() {
           fill_bernoulli_geometric(b.ref(), b.num_bits(), 0.001, rng);
       })
        .goal_nanos(4e4)
        .show_rate("bits", static_cast<double>(b.num_bits()));
}

void bench_frame_rep_code(BenchRun &run) {
    Circuit c = Circuit::parse(gen_rep_code(5, 20, 0.01));
    Rng rng(8);
    std::vector<bool> reference = TableauSimulator::reference_sample(c, rng);
    run.go([&]() {
           sample_measurements(c, reference, 1024, rng);
       })
        .goal_nanos(1.3e5)
        .show_rate("shots", 1024);
}

void bench_parse(BenchRun &run) {
    std::string text = gen_rep_code(25, 100, 0.001, true);
    run.go([&]() {
           Circuit::parse(text);
       })
        .goal_nanos(2.5e4)
        .show_rate("bytes", static_cast<double>(text.size()));
}

void bench_inverse(BenchRun &run) {
    Rng rng(9);
    Tableau t = Tableau::random(128, rng);
    run.go([&]() {
           t.inverse();
       })
        .goal_nanos(2e6)
        .show_rate("tableaus", 1);
}

}  // namespace

const std::vector<Benchmark> &benchmark_registry() {
    static const std::vector<Benchmark> registry = {
        {"empty", bench_empty},
        {"pauli_mul_10K", bench_pauli_mul},
        {"tableau_prepend_CNOT_1K", bench_prepend_cnot},
        {"tableau_inverse_128", bench_inverse},
        {"sim_random_measure_256", bench_random_measure},
        {"sim_deterministic_measure_1024", bench_det_measure_1k},
        {"sim_deterministic_measure_4096", bench_det_measure_4k},
        {"transpose_1024x1024", bench_transpose},
        {"entropy_hybrid_p0.3_1M", bench_hybrid},
        {"entropy_geometric_p0.001_1M", bench_geometric},
        {"frame_rep_code_d5_r20_1024shots", bench_frame_rep_code},
        {"parse_rep_code_d25_r100", bench_parse},
    };
    return registry;
}

std::vector<BenchResult> run_benchmarks(
    std::string_view filter, double seconds, const std::map<std::string, double> &references) {
    std::vector<BenchResult> results;
    for (const Benchmark &b : benchmark_registry()) {
        if (b.name.find(filter) == std::string::npos) {
            continue;
        }
        BenchRun run(b.name, seconds);
        b.body(run);
        BenchResult r = run.result();
        auto it = references.find(b.name);
        if (it != references.end()) {
            r.reference_nanos = it->second;
        }
        results.push_back(r);
    }
    return results;
}

std::string format_bench_results(const std::vector<BenchResult> &results) {
    constexpr int kHalf = 20;
    std::string out;
    for (const BenchResult &r : results) {
        double db = r.deviation_db();
        int offset = std::isfinite(db) ? static_cast<int>(std::lround(std::clamp(db, -1.0 * kHalf, 1.0 * kHalf))) : 0;
        std::string bar(2 * kHalf + 1, '.');
        bar[kHalf] = '|';
        bar[kHalf + offset] = '*';
        char line[256];
        std::snprintf(
            line,
            sizeof(line),
            "[%s] %+6.1f dB %12.1f ns/call (ref %10.1f) %s",
            bar.c_str(),
            db,
            r.measured_nanos,
            r.reference_nanos,
            r.name.c_str());
        out += line;
        if (r.rate_per_call > 0 && r.measured_nanos > 0) {
            double rate = r.rate_per_call / (r.measured_nanos * 1e-9);
            std::snprintf(line, sizeof(line), "  %.3g %s/s", rate, r.rate_unit.c_str());
            out += line;
        }
        out += "\n";
    }
    return out;
}

std::map<std::string, double> parse_bench_references(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) {
        throw std::invalid_argument("benchmark reference file must hold a JSON object of name -> nanoseconds");
    }
    std::map<std::string, double> result;
    for (auto &[name, value] : j.items()) {
        if (!value.is_number()) {
            throw std::invalid_argument("reference time for '" + name + "' is not a number");
        }
        result[name] = value.get<double>();
    }
    return result;
}

double time_deterministic_measurement(size_t num_qubits, double seconds, uint64_t seed) {
    TableauSimulator sim(num_qubits, Rng(seed));
    Rng rng(seed + 1);
    std::uniform_int_distribution<size_t> pick(0, num_qubits - 1);
    for (size_t k = 0; k < 4 * num_qubits; k++) {
        size_t a = pick(rng);
        size_t b = pick(rng);
        if (a != b) {
            sim.cnot(a, b);
        }
    }
    for (size_t q = 0; q < num_qubits; q++) {
        if (!sim.is_deterministic_z(q)) {
            throw std::logic_error("expected every Z measurement to be deterministic");
        }
    }
    size_t q = 0;
    return time_per_call(
        [&]() {
            sim.measure(q);
            q = q + 1 == num_qubits ? 0 : q + 1;
            if (sim.measurement_record.size() > 4096) {
                sim.measurement_record.clear();
            }
        },
        seconds);
}

std::string gen_rep_code(size_t distance, size_t rounds, double p, bool detectors) {
    if (distance == 0 || rounds == 0) {
        throw std::invalid_argument("distance and rounds must be positive");
    }
    size_t n = 2 * distance + 1;
    std::string round_body;
    round_body += "X_ERROR(" + prob_text(p) + ")" + qubit_list(0, n) + "\n";
    round_body += "CNOT" + qubit_list(0, n - 1) + "\n";
    round_body += "CNOT";
    for (size_t q = n - 1; q >= 1; q--) {
        round_body += " " + std::to_string(q);
    }
    round_body += "\n";
    round_body += "MR" + qubit_list(1, n, 2) + "\n";
    if (!detectors) {
        std::string indented;
        std::istringstream lines(round_body);
        for (std::string line; std::getline(lines, line);) {
            indented += "    " + line + "\n";
        }
        return "REPEAT " + std::to_string(rounds) + " {\n" + indented + "}\n";
    }
    std::string first = round_body;
    std::string later = round_body;
    for (size_t k = distance; k >= 1; k--) {
        first += "DETECTOR rec[-" + std::to_string(k) + "]\n";
        later += "DETECTOR rec[-" + std::to_string(k) + "] rec[-" + std::to_string(k + distance) + "]\n";
    }
    std::string out = first;
    if (rounds > 1) {
        out += "REPEAT " + std::to_string(rounds - 1) + " {\n";
        std::istringstream lines(later);
        for (std::string line; std::getline(lines, line);) {
            out += "    " + line + "\n";
        }
        out += "}\n";
    }
    return out;
}

std::string gen_random_circuit(size_t num_qubits, size_t layers, uint64_t seed) {
    Rng rng(seed);
    std::string out;
    std::vector<size_t> order(num_qubits);
    std::iota(order.begin(), order.end(), size_t{0});
    size_t num_measured = std::max<size_t>(1, (num_qubits * 5 + 99) / 100);
    for (size_t layer = 0; layer < layers; layer++) {
        for (size_t q = 0; q < num_qubits; q++) {
            static constexpr const char *kSingle[] = {"H", "S", "I"};
            out += std::string(kSingle[rng() % 3]) + " " + std::to_string(q) + "\n";
        }
        std::shuffle(order.begin(), order.end(), rng);
        for (size_t k = 0; k + 1 < num_qubits; k += 2) {
            out += "CNOT " + std::to_string(order[k]) + " " + std::to_string(order[k + 1]) + "\n";
        }
        std::shuffle(order.begin(), order.end(), rng);
        for (size_t k = 0; k < num_measured && k < num_qubits; k++) {
            std::string q = std::to_string(order[k]);
            switch (rng() % 3) {
                case 0:
                    out += "M " + q + "\n";
                    break;
                case 1:
                    out += "H " + q + "\nM " + q + "\nH " + q + "\n";
                    break;
                default:
                    out += "S_DAG " + q + "\nH " + q + "\nM " + q + "\nH " + q + "\nS " + q + "\n";
                    break;
            }
        }
    }
    return out;
}

std::string gen_surface_like(size_t distance, size_t rounds, double p) {
    if (distance < 2 || rounds == 0) {
        throw std::invalid_argument("surface_like needs distance >= 2 and rounds >= 1");
    }
    size_t side = 2 * distance - 1;
    auto index = [&](size_t r, size_t c) {
        return r * side + c;
    };
    std::vector<size_t> data;
    std::vector<std::pair<size_t, size_t>> z_checks;
    std::vector<std::pair<size_t, size_t>> x_checks;
    for (size_t r = 0; r < side; r++) {
        for (size_t c = 0; c < side; c++) {
            if ((r + c) % 2 == 0) {
                data.push_back(index(r, c));
            } else if (r % 2 == 1) {
                z_checks.emplace_back(r, c);
            } else {
                x_checks.emplace_back(r, c);
            }
        }
    }
    const int kDirs[4][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    std::string round_body;
    round_body += "X_ERROR(" + prob_text(p) + ")";
    for (size_t q : data) {
        round_body += " " + std::to_string(q);
    }
    round_body += "\n";
    for (bool z_type : {true, false}) {
        const auto &checks = z_type ? z_checks : x_checks;
        if (!z_type) {
            round_body += "H";
            for (auto [r, c] : checks) {
                round_body += " " + std::to_string(index(r, c));
            }
            round_body += "\n";
        }
        for (const auto &dir : kDirs) {
            std::string layer;
            for (auto [r, c] : checks) {
                long nr = static_cast<long>(r) + dir[0];
                long nc = static_cast<long>(c) + dir[1];
                if (nr < 0 || nc < 0 || nr >= static_cast<long>(side) || nc >= static_cast<long>(side)) {
                    continue;
                }
                size_t a = index(r, c);
                size_t d = index(static_cast<size_t>(nr), static_cast<size_t>(nc));
                layer += z_type ? " " + std::to_string(d) + " " + std::to_string(a)
                                : " " + std::to_string(a) + " " + std::to_string(d);
            }
            if (!layer.empty()) {
                round_body += "CNOT" + layer + "\n";
            }
        }
        if (!z_type) {
            round_body += "H";
            for (auto [r, c] : checks) {
                round_body += " " + std::to_string(index(r, c));
            }
            round_body += "\n";
        }
    }
    round_body += "MR";
    for (const auto *checks : {&z_checks, &x_checks}) {
        for (auto [r, c] : *checks) {
            round_body += " " + std::to_string(index(r, c));
        }
    }
    round_body += "\n";
    size_t num_anc = z_checks.size() + x_checks.size();
    std::string first = round_body;
    for (size_t j = 0; j < z_checks.size(); j++) {
        first += "DETECTOR rec[-" + std::to_string(num_anc - j) + "]\n";
    }
    std::string later = round_body;
    for (size_t j = 0; j < num_anc; j++) {
        later += "DETECTOR rec[-" + std::to_string(num_anc - j) + "] rec[-" + std::to_string(2 * num_anc - j) + "]\n";
    }
    std::string out = first;
    if (rounds > 1) {
        out += "REPEAT " + std::to_string(rounds - 1) + " {\n";
        std::istringstream lines(later);
        for (std::string line; std::getline(lines, line);) {
            out += "    " + line + "\n";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace stabsim
