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

#include "stabsim/frame_simulator.h"

#include "stabsim/tableau_simulator.h"

namespace stabsim {

FrameSimulator::FrameSimulator(size_t num_qubits, size_t batch_size, uint64_t max_measurements, Rng &rng)
    : x_table(num_qubits, batch_size),
      z_table(num_qubits, batch_size),
      flip_record(max_measurements, batch_size),
      num_qubits_(num_qubits),
      batch_size_(batch_size),
      batch_bits_(round_up_bits(batch_size, kWordBits)),
      rng_(rng),
      scratch_(batch_size) {
    if (batch_size == 0) {
        throw std::invalid_argument("batch size must be positive");
    }
}

void FrameSimulator::require_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
    }
}

void FrameSimulator::reset_all() {
    x_table.clear();
    for (size_t q = 0; q < num_qubits_; q++) {
        z_table[q].randomize(batch_bits_, rng_);
    }
    flip_record.clear();
    num_recorded_ = 0;
}

void apply_frame_rule(const GateData &gate, BitRef x0, BitRef z0, BitRef x1, BitRef z1) {
    uint64_t *planes[4] = {x0.data(), z0.data(), x1.data(), z1.data()};
    size_t num_planes = 2 * gate.arity;
    for (size_t w = 0; w < x0.num_u64(); w++) {
        uint64_t in[4] = {};
        for (size_t i = 0; i < num_planes; i++) {
            in[i] = planes[i][w];
        }
        for (size_t r = 0; r < num_planes; r++) {
            uint64_t acc = 0;
            for (size_t i = 0; i < num_planes; i++) {
                if ((gate.frame_rule[r] >> i) & 1) {
                    acc ^= in[i];
                }
            }
            planes[r][w] = acc;
        }
    }
}

void FrameSimulator::apply_unitary(const GateData &gate, std::span<const GateTarget> targets) {
    for (size_t k = 0; k < targets.size(); k += gate.arity) {
        size_t a = targets[k].value();
        require_qubit(a);
        size_t b = 0;
        if (gate.arity == 2) {
            b = targets[k + 1].value();
            require_qubit(b);
        }
        switch (gate.type) {
            case GateType::I:
            case GateType::X:
            case GateType::Y:
            case GateType::Z:
                break;
            case GateType::H:
            case GateType::SQRT_Y:
            case GateType::SQRT_Y_DAG:
                x_table[a].swap_with(z_table[a]);
                break;
            case GateType::S:
            case GateType::S_DAG:
                z_table[a] ^= x_table[a];
                break;
            case GateType::H_YZ:
                x_table[a] ^= z_table[a];
                break;
            case GateType::CNOT:
                z_table[a] ^= z_table[b];
                x_table[b] ^= x_table[a];
                break;
            case GateType::CZ:
                z_table[a] ^= x_table[b];
                z_table[b] ^= x_table[a];
                break;
            case GateType::CY: {
                uint64_t *xc = x_table[a].data();
                uint64_t *zc = z_table[a].data();
                uint64_t *xt = x_table[b].data();
                uint64_t *zt = z_table[b].data();
                for (size_t w = 0; w < x_table.row_u64(); w++) {
                    zc[w] ^= xt[w] ^ zt[w];
                    xt[w] ^= xc[w];
                    zt[w] ^= xc[w];
                }
                break;
            }
            case GateType::SWAP:
                x_table[a].swap_with(x_table[b]);
                z_table[a].swap_with(z_table[b]);
                break;
            default:
                if (!gate.is_unitary()) {
                    throw std::invalid_argument("gate " + std::string(gate.name) + " is not unitary");
                }
                if (gate.arity == 2) {
                    apply_frame_rule(gate, x_table[a], z_table[a], x_table[b], z_table[b]);
                } else {
                    apply_frame_rule(gate, x_table[a], z_table[a], BitRef(), BitRef());
                }
        }
    }
}

void FrameSimulator::apply_noise(const GateData &gate, double p, std::span<const GateTarget> targets) {
    const std::vector<uint8_t> &paulis = gate.noise_paulis;
    std::uniform_int_distribution<size_t> choose(0, paulis.size() - 1);
    auto apply_hit = [&](size_t group, size_t lane) {
        uint8_t pauli = paulis.size() == 1 ? paulis[0] : paulis[choose(rng_)];
        for (size_t j = 0; j < gate.arity; j++) {
            size_t q = targets[group * gate.arity + j].value();
            if ((pauli >> (2 * j)) & 1) {
                x_table[q].toggle(lane);
            }
            if ((pauli >> (2 * j + 1)) & 1) {
                z_table[q].toggle(lane);
            }
        }
    };
    for (const GateTarget &t : targets) {
        require_qubit(t.value());
    }
    size_t num_groups = targets.size() / gate.arity;
    if (p < kGeometricBelow) {
        // One index space over every (group, frame) trial keeps the cost proportional to the hits.
        for_each_hit_geometric(num_groups * batch_size_, p, rng_, [&](uint64_t index) {
            apply_hit(index / batch_size_, index % batch_size_);
        });
        return;
    }
    for (size_t g = 0; g < num_groups; g++) {
        biased_randomize_bits(scratch_.ref(), batch_size_, p, rng_);
        if (paulis.size() == 1) {
            for (size_t j = 0; j < gate.arity; j++) {
                size_t q = targets[g * gate.arity + j].value();
                if ((paulis[0] >> (2 * j)) & 1) {
                    x_table[q] ^= scratch_.view();
                }
                if ((paulis[0] >> (2 * j + 1)) & 1) {
                    z_table[q] ^= scratch_.view();
                }
            }
        } else {
            scratch_.view().for_each_set_bit([&](size_t lane) {
                apply_hit(g, lane);
            });
        }
    }
}

void FrameSimulator::record_row(BitView row) {
    if (num_recorded_ >= flip_record.num_major()) {
        throw std::logic_error("more measurements than the flip record was sized for");
    }
    flip_record[num_recorded_].overwrite_with(row);
    num_recorded_++;
}

void FrameSimulator::measure(size_t q) {
    require_qubit(q);
    record_row(x_table[q]);
    uint64_t *z = z_table[q].data();
    for (size_t w = 0; w < (batch_size_ + 63) / 64; w++) {
        z[w] ^= rng_();
    }
}

void FrameSimulator::reset(size_t q) {
    require_qubit(q);
    x_table[q].clear();
    z_table[q].randomize(batch_size_, rng_);
}

void FrameSimulator::measure_reset(size_t q) {
    require_qubit(q);
    record_row(x_table[q]);
    reset(q);
}

void FrameSimulator::do_instruction(const Instruction &inst) {
    const GateData &gate = *inst.gate;
    switch (gate.type) {
        case GateType::M:
            for (const GateTarget &t : inst.targets) {
                measure(t.value());
            }
            return;
        case GateType::R:
            for (const GateTarget &t : inst.targets) {
                reset(t.value());
            }
            return;
        case GateType::MR:
            for (const GateTarget &t : inst.targets) {
                measure_reset(t.value());
            }
            return;
        case GateType::DETECTOR:
            return;
        default:
            break;
    }
    if (gate.is_noise()) {
        apply_noise(gate, inst.arg, inst.targets);
    } else {
        apply_unitary(gate, inst.targets);
    }
}

void FrameSimulator::run(const Circuit &circuit) {
    reset_all();
    circuit.for_each_flat([&](const Instruction &inst) {
        do_instruction(inst);
    });
}

namespace {

template <typename PerBatch>
SampleTable run_batches(
    const Circuit &circuit, size_t num_shots, size_t num_results, Rng &rng, size_t batch_size, PerBatch &&finish) {
    SampleTable out(num_shots, num_results);
    FrameSimulator sim(circuit.num_qubits(), batch_size, circuit.num_measurements(), rng);
    for (size_t done = 0; done < num_shots; done += batch_size) {
        size_t shots = std::min(batch_size, num_shots - done);
        sim.run(circuit);
        SampleTable part = finish(sim, shots);
        for (size_t s = 0; s < shots; s++) {
            out.bits[done + s].overwrite_with(part.bits[s]);
        }
    }
    return out;
}

}  // namespace

SampleTable sample_measurements(
    const Circuit &circuit, const std::vector<bool> &reference, size_t num_shots, Rng &rng, size_t batch_size) {
    uint64_t m = circuit.num_measurements();
    if (reference.size() != m) {
        throw std::invalid_argument(
            "reference sample has " + std::to_string(reference.size()) + " bits but the circuit makes " +
            std::to_string(m) + " measurements");
    }
    return run_batches(circuit, num_shots, m, rng, batch_size, [&](FrameSimulator &sim, size_t shots) {
        for (size_t k = 0; k < m; k++) {
            if (reference[k]) {
                for (uint64_t &w : sim.flip_record[k].u64()) {
                    w = ~w;
                }
            }
        }
        return shots_from_result_major(sim.flip_record, shots);
    });
}

SampleTable sample_circuit(const Circuit &circuit, size_t num_shots, Rng &rng, size_t batch_size) {
    std::vector<bool> reference = TableauSimulator::reference_sample(circuit, rng);
    return sample_measurements(circuit, reference, num_shots, rng, batch_size);
}

SampleTable sample_detection_events(const Circuit &circuit, size_t num_shots, Rng &rng, size_t batch_size) {
    std::vector<std::vector<uint64_t>> sets = circuit.detector_sets();
    return run_batches(circuit, num_shots, sets.size(), rng, batch_size, [&](FrameSimulator &sim, size_t shots) {
        return shots_from_result_major(combine_rows(sim.flip_record, sets), shots);
    });
}

}  // namespace stabsim
