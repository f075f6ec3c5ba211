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

#include "stabsim/tableau_simulator.h"

#include <algorithm>

namespace stabsim {

TableauSimulator::TableauSimulator(size_t num_qubits, Rng rng) : inv(num_qubits), rng(std::move(rng)) {
}

void TableauSimulator::ensure_qubits(size_t n) {
    if (n > inv.num_qubits) {
        inv = inv.expanded(n);
    }
}

void TableauSimulator::prepend_inverse(const GateData &gate, const GateTarget *group) {
    size_t a = group[0].value();
    switch (gate.inverse) {
        case GateType::I:
            return;
        case GateType::X:
            inv.prepend_X(a);
            return;
        case GateType::Y:
            inv.prepend_Y(a);
            return;
        case GateType::Z:
            inv.prepend_Z(a);
            return;
        case GateType::H:
            inv.prepend_H(a);
            return;
        case GateType::S:
            inv.prepend_S(a);
            return;
        case GateType::S_DAG:
            inv.prepend_S_DAG(a);
            return;
        case GateType::SQRT_Y:
            inv.prepend_SQRT_Y(a);
            return;
        case GateType::SQRT_Y_DAG:
            inv.prepend_SQRT_Y_DAG(a);
            return;
        case GateType::CNOT:
            inv.prepend_CNOT(a, group[1].value());
            return;
        case GateType::CZ:
            inv.prepend_CZ(a, group[1].value());
            return;
        case GateType::SWAP:
            inv.prepend_SWAP(a, group[1].value());
            return;
        default: {
            size_t targets[2] = {a, gate.arity > 1 ? group[1].value() : 0};
            inv.inplace_scatter_prepend(gate_data(gate.inverse).tableau(), std::span<const size_t>(targets, gate.arity));
        }
    }
}

void TableauSimulator::apply_unitary(const GateData &gate, std::span<const GateTarget> targets) {
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate " + std::string(gate.name) + " is not unitary");
    }
    if (targets.size() % gate.arity) {
        throw std::invalid_argument("target count isn't a multiple of the gate's arity");
    }
    uint32_t max_target = 0;
    for (const GateTarget &t : targets) {
        max_target = std::max(max_target, t.value());
    }
    if (!targets.empty()) {
        ensure_qubits(size_t{max_target} + 1);
    }
    for (size_t k = 0; k < targets.size(); k += gate.arity) {
        if (gate.arity == 2 && targets[k] == targets[k + 1]) {
            throw std::invalid_argument("two-qubit gate applied to the same qubit twice");
        }
        prepend_inverse(gate, &targets[k]);
    }
}

void TableauSimulator::apply_noise(const GateData &gate, double p, std::span<const GateTarget> targets) {
    if (!gate.is_noise()) {
        throw std::invalid_argument("gate " + std::string(gate.name) + " is not a noise channel");
    }
    std::uniform_int_distribution<size_t> choose(0, gate.noise_paulis.size() - 1);
    for (size_t k = 0; k < targets.size(); k += gate.arity) {
        if (!(uniform_open_closed(rng) <= p)) {
            continue;
        }
        uint8_t pauli = gate.noise_paulis[choose(rng)];
        for (size_t j = 0; j < gate.arity; j++) {
            size_t q = targets[k + j].value();
            ensure_qubits(q + 1);
            bool x = (pauli >> (2 * j)) & 1;
            bool z = (pauli >> (2 * j + 1)) & 1;
            if (x && z) {
                inv.prepend_Y(q);
            } else if (x) {
                inv.prepend_X(q);
            } else if (z) {
                inv.prepend_Z(q);
            }
        }
    }
}

bool TableauSimulator::is_deterministic_z(size_t q) const {
    if (q >= inv.num_qubits) {
        return true;
    }
    return !inv.zs.xt[q].not_zero();
}

void TableauSimulator::collapse_z(size_t q) {
    if (is_deterministic_z(q)) {
        return;
    }
    TableauTransposedRaii rows(inv);
    size_t n = inv.num_qubits;
    size_t pivot = 0;
    while (!inv.zs.xt[pivot].get(q)) {
        pivot++;
    }
    for (size_t k = pivot + 1; k < n; k++) {
        if (inv.zs.xt[k].get(q)) {
            rows.append_CNOT(pivot, k);
        }
    }
    if (inv.zs.zt[pivot].get(q)) {
        rows.append_H_YZ(pivot);
    } else {
        rows.append_H(pivot);
    }
    bool coin = rng() & 1;
    if (coin != static_cast<bool>(inv.zs.signs[q])) {
        rows.append_X(pivot);
    }
}

bool TableauSimulator::measure(size_t q) {
    ensure_qubits(q + 1);
    collapse_z(q);
    bool result = inv.zs.signs[q];
    measurement_record.push_back(result);
    return result;
}

void TableauSimulator::reset(size_t q) {
    ensure_qubits(q + 1);
    collapse_z(q);
    inv.zs.signs[q] = false;
}

bool TableauSimulator::measure_reset(size_t q) {
    bool result = measure(q);
    inv.zs.signs[q] = false;
    return result;
}

void TableauSimulator::do_instruction(const Instruction &inst) {
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
        if (noise_enabled) {
            apply_noise(gate, inst.arg, inst.targets);
        }
        return;
    }
    apply_unitary(gate, inst.targets);
}

void TableauSimulator::run(const Circuit &circuit) {
    ensure_qubits(circuit.num_qubits());
    circuit.for_each_flat([&](const Instruction &inst) {
        do_instruction(inst);
    });
}

std::vector<bool> TableauSimulator::reference_sample(const Circuit &circuit, Rng &rng) {
    TableauSimulator sim(circuit.num_qubits(), Rng(rng()));
    sim.noise_enabled = false;
    sim.measurement_record.reserve(circuit.num_measurements());
    sim.run(circuit);
    return std::move(sim.measurement_record);
}

std::vector<bool> TableauSimulator::sample_once(const Circuit &circuit, Rng &rng) {
    TableauSimulator sim(circuit.num_qubits(), Rng(rng()));
    sim.measurement_record.reserve(circuit.num_measurements());
    sim.run(circuit);
    return std::move(sim.measurement_record);
}

void TableauSimulator::apply_gate_type(GateType type, std::initializer_list<size_t> qubits) {
    GateTarget targets[2];
    size_t n = 0;
    for (size_t q : qubits) {
        targets[n++] = GateTarget::qubit(static_cast<uint32_t>(q));
    }
    apply_unitary(gate_data(type), std::span<const GateTarget>(targets, n));
}

void TableauSimulator::i(size_t q) {
    apply_gate_type(GateType::I, {q});
}
void TableauSimulator::x(size_t q) {
    apply_gate_type(GateType::X, {q});
}
void TableauSimulator::y(size_t q) {
    apply_gate_type(GateType::Y, {q});
}
void TableauSimulator::z(size_t q) {
    apply_gate_type(GateType::Z, {q});
}
void TableauSimulator::h(size_t q) {
    apply_gate_type(GateType::H, {q});
}
void TableauSimulator::h_yz(size_t q) {
    apply_gate_type(GateType::H_YZ, {q});
}
void TableauSimulator::s(size_t q) {
    apply_gate_type(GateType::S, {q});
}
void TableauSimulator::s_dag(size_t q) {
    apply_gate_type(GateType::S_DAG, {q});
}
void TableauSimulator::sqrt_y(size_t q) {
    apply_gate_type(GateType::SQRT_Y, {q});
}
void TableauSimulator::sqrt_y_dag(size_t q) {
    apply_gate_type(GateType::SQRT_Y_DAG, {q});
}
void TableauSimulator::cnot(size_t control, size_t target) {
    apply_gate_type(GateType::CNOT, {control, target});
}
void TableauSimulator::cy(size_t control, size_t target) {
    apply_gate_type(GateType::CY, {control, target});
}
void TableauSimulator::cz(size_t a, size_t b) {
    apply_gate_type(GateType::CZ, {a, b});
}
void TableauSimulator::swap(size_t a, size_t b) {
    apply_gate_type(GateType::SWAP, {a, b});
}

std::vector<bool> TableauSimulator::measure_many(std::initializer_list<size_t> qubits) {
    std::vector<bool> results;
    for (size_t q : qubits) {
        results.push_back(measure(q));
    }
    return results;
}

}  // namespace stabsim
