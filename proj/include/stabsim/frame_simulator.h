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

#ifndef STABSIM_FRAME_SIMULATOR_H
#define STABSIM_FRAME_SIMULATOR_H

#include <span>
#include <vector>

#include "stabsim/circuit.h"
#include "stabsim/entropy.h"
#include "stabsim/sample_formats.h"

namespace stabsim {

constexpr size_t kDefaultBatchSize = 1024;

/// A batch of Pauli frames propagated through a circuit together.
///
/// Row q of `x_table`/`z_table` holds the x/z bit of qubit q for every frame in the batch (frames
/// along the minor axis). Signs are not tracked. Each measurement appends one row to `flip_record`:
/// bit f says whether frame f flips that measurement relative to the reference.
class FrameSimulator {
  public:
    FrameSimulator(size_t num_qubits, size_t batch_size, uint64_t max_measurements, Rng &rng);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t batch_size() const {
        return batch_size_;
    }
    uint64_t num_recorded() const {
        return num_recorded_;
    }

    /// Frames become random I/Z products (x zero, z uniform), and the flip record is cleared.
    void reset_all();

    void apply_unitary(const GateData &gate, std::span<const GateTarget> targets);
    void apply_noise(const GateData &gate, double p, std::span<const GateTarget> targets);
    void measure(size_t q);
    void reset(size_t q);
    void measure_reset(size_t q);

    void do_instruction(const Instruction &inst);
    /// reset_all, then every instruction of the circuit.
    void run(const Circuit &circuit);

    BitTable x_table;
    BitTable z_table;
    BitTable flip_record;

  private:
    void require_qubit(size_t q) const;
    void record_row(BitView row);

    size_t num_qubits_;
    size_t batch_size_;
    size_t batch_bits_;
    uint64_t num_recorded_ = 0;
    Rng &rng_;
    BitBuffer scratch_;
};

/// Applies a gate's frame_rule to planes (x_0, z_0, x_1, z_1) of every frame. Exposed for tests;
/// FrameSimulator uses hand-written kernels for the common gates.
void apply_frame_rule(const GateData &gate, BitRef x0, BitRef z0, BitRef x1, BitRef z1);

/// Samples `num_shots` executions of the circuit: the reference XORed with batched frame flips.
/// `reference` must have circuit.num_measurements() entries.
SampleTable sample_measurements(
    const Circuit &circuit,
    const std::vector<bool> &reference,
    size_t num_shots,
    Rng &rng,
    size_t batch_size = kDefaultBatchSize);

/// Reference from the tableau simulator, then sample_measurements.
SampleTable sample_circuit(const Circuit &circuit, size_t num_shots, Rng &rng, size_t batch_size = kDefaultBatchSize);

/// Detection events for `num_shots` executions: per shot and detector, the XOR of the measurement
/// flips the detector covers.
SampleTable sample_detection_events(
    const Circuit &circuit, size_t num_shots, Rng &rng, size_t batch_size = kDefaultBatchSize);

}  // namespace stabsim

#endif
