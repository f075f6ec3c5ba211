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

#ifndef STABSIM_BENCH_H
#define STABSIM_BENCH_H

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stabsim {

struct BenchResult {
    std::string name;
    double measured_nanos = 0;
    double reference_nanos = 0;
    std::string rate_unit;
    double rate_per_call = 0;

    /// 10*log10(measured/reference). Positive means slower than the reference.
    double deviation_db() const {
        return 10 * std::log10(measured_nanos / reference_nanos);
    }
};

/// Repeats `body` until `seconds` of wall time have elapsed and returns nanoseconds per call.
template <typename F>
double time_per_call(F &&body, double seconds) {
    using clock = std::chrono::steady_clock;
    body();
    uint64_t reps = 0;
    uint64_t batch = 1;
    auto start = clock::now();
    double elapsed = 0;
    while (true) {
        for (uint64_t k = 0; k < batch; k++) {
            body();
        }
        reps += batch;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (elapsed >= seconds) {
            break;
        }
        batch *= 2;
        if (elapsed > 0) {
            // Aim the next batch at the remaining time instead of overshooting by doubling.
            double per_call = elapsed / static_cast<double>(reps);
            double remaining = (seconds - elapsed) / per_call;
            if (remaining < static_cast<double>(batch)) {
                batch = static_cast<uint64_t>(remaining) + 1;
            }
        }
    }
    return elapsed * 1e9 / static_cast<double>(reps);
}

/// Passed to each registered benchmark. `go` times the body; the other calls annotate the result.
class BenchRun {
  public:
    BenchRun(std::string name, double seconds) : seconds_(seconds) {
        result_.name = std::move(name);
    }

    template <typename F>
    BenchRun &go(F &&body) {
        result_.measured_nanos = time_per_call(body, seconds_);
        return *this;
    }
    BenchRun &goal_nanos(double nanos) {
        result_.reference_nanos = nanos;
        return *this;
    }
    BenchRun &show_rate(std::string unit, double per_call) {
        result_.rate_unit = std::move(unit);
        result_.rate_per_call = per_call;
        return *this;
    }
    const BenchResult &result() const {
        return result_;
    }

  private:
    double seconds_;
    BenchResult result_;
};

struct Benchmark {
    std::string name;
    void (*body)(BenchRun &);
};

const std::vector<Benchmark> &benchmark_registry();

/// Runs every benchmark whose name contains `filter`, each for about `seconds`. Entries in
/// `references` (name -> nanoseconds) replace the built-in reference times.
std::vector<BenchResult> run_benchmarks(
    std::string_view filter, double seconds, const std::map<std::string, double> &references = {});

/// One line per result: an ASCII bar with '*' at the deviation (one column per dB, clamped to
/// +-20 dB, '|' at zero), then the deviation, the time per call, the reference, and the name.
std::string format_bench_results(const std::vector<BenchResult> &results);

/// Reads {"name": nanos, ...} from JSON text.
std::map<std::string, double> parse_bench_references(std::string_view json_text);

/// Mean nanoseconds per deterministic Z measurement on an n-qubit state whose inverse tableau has
/// dense Z-only images (built from |0...0> by random CNOTs).
double time_deterministic_measurement(size_t num_qubits, double seconds, uint64_t seed = 0);

// Circuit generators. Each returns circuit text.

/// Repetition code with 2*distance+1 qubits (even data, odd ancillas). Without detectors the text
/// is a single REPEAT block:
///     X_ERROR(p) on every qubit, CNOT data->right ancilla, CNOT data->left ancilla, MR ancillas.
/// With detectors, the first round is unrolled; its detectors cover one ancilla result each and
/// later rounds compare each ancilla with its previous result.
std::string gen_rep_code(size_t distance, size_t rounds, double p, bool detectors = false);

/// Layered random circuit: each layer applies H, S, or I to every qubit, CNOTs on a random pairing,
/// and measures 5% of the qubits in a random Pauli basis. One instruction per gate application.
std::string gen_random_circuit(size_t num_qubits, size_t layers, uint64_t seed);

/// Unrotated surface-code-style memory circuit on a (2d-1)x(2d-1) grid. Each round: X_ERROR(p)
/// on data, Z-check CNOTs, then X-check CNOTs (ancillas in the X basis), MR on all ancillas, and
/// detectors (Z checks every round, X checks from round 2).
std::string gen_surface_like(size_t distance, size_t rounds, double p);

}  // namespace stabsim

#endif
