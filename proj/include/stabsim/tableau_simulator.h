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

#ifndef STABSIM_TABLEAU_SIMULATOR_H
#define STABSIM_TABLEAU_SIMULATOR_H

#include <initializer_list>
#include <span>
#include <vector>

#include "stabsim/circuit.h"
#include "stabsim/entropy.h"
#include "stabsim/tableau.h"

namespace stabsim {

/// Stabilizer simulator that tracks the inverse of the Clifford applied so far.
///
/// `inv` maps each current-time Pauli to the start-of-time Pauli it is equivalent to. The start
/// state is |0...0>, so Z_q is deterministic exactly when inv(Z_q) has no X or Y terms. Qubits are
/// added on demand when a target exceeds the current size.
class TableauSimulator {
  public:
    explicit TableauSimulator(size_t num_qubits = 0, Rng rng = Rng(0));

    size_t num_qubits() const {
        return inv.num_qubits;
    }
    void ensure_qubits(size_t num_qubits);

    /// Applies a unitary gate to consecutive target groups: inv := inv ∘ g^-1 for each group.
    void apply_unitary(const GateData &gate, std::span<const GateTarget> targets);
    /// Applies one application of a noise channel per target group, sampled with the simulator's rng.
    void apply_noise(const GateData &gate, double p, std::span<const GateTarget> targets);

    /// Z basis measurement. Appends the result to `measurement_record`.
    bool measure(size_t q);
    /// Resets q to |0>.
    void reset(size_t q);
    /// Measures q, then resets it. Appends the measurement result.
    bool measure_reset(size_t q);
    /// True when a Z measurement of q has a predetermined result.
    bool is_deterministic_z(size_t q) const;

    /// Runs one instruction. Noise instructions are skipped when `noise_enabled` is false, and
    /// DETECTOR is ignored.
    void do_instruction(const Instruction &inst);
    void run(const Circuit &circuit);

    /// One noiseless execution of `circuit`, random measurement outcomes drawn from `rng`.
    static std::vector<bool> reference_sample(const Circuit &circuit, Rng &rng);
    /// One noisy execution of `circuit`.
    static std::vector<bool> sample_once(const Circuit &circuit, Rng &rng);

    // Interactive gate methods.
    void i(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void h(size_t q);
    void h_yz(size_t q);
    void s(size_t q);
    void s_dag(size_t q);
    void sqrt_y(size_t q);
    void sqrt_y_dag(size_t q);
    void cnot(size_t control, size_t target);
    void cy(size_t control, size_t target);
    void cz(size_t a, size_t b);
    void swap(size_t a, size_t b);
    std::vector<bool> measure_many(std::initializer_list<size_t> qubits);

    Tableau inv;
    Rng rng;
    std::vector<bool> measurement_record;
    bool noise_enabled = true;

  private:
    void apply_gate_type(GateType type, std::initializer_list<size_t> qubits);
    void prepend_inverse(const GateData &gate, const GateTarget *group);
    void collapse_z(size_t q);
};

}  // namespace stabsim

#endif
