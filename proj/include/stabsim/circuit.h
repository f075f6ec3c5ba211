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

#ifndef STABSIM_CIRCUIT_H
#define STABSIM_CIRCUIT_H

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stabsim/gate_data.h"

namespace stabsim {

/// A qubit index, or (for DETECTOR) a lookback `rec[-k]` into the measurement record.
struct GateTarget {
    static constexpr uint32_t kRecordBit = uint32_t{1} << 31;

    uint32_t data = 0;

    static GateTarget qubit(uint32_t q) {
        return {q};
    }
    static GateTarget record(uint32_t lookback) {
        return {lookback | kRecordBit};
    }
    bool is_record() const {
        return data & kRecordBit;
    }
    /// Qubit index, or the k of rec[-k].
    uint32_t value() const {
        return data & ~kRecordBit;
    }
    bool operator==(const GateTarget &) const = default;
    std::string str() const;
};

struct Instruction {
    const GateData *gate = nullptr;
    double arg = 0;
    std::vector<GateTarget> targets;

    bool operator==(const Instruction &other) const;
    std::string str() const;
};

class Circuit;

struct RepeatBlock {
    uint64_t count = 0;
    std::shared_ptr<const Circuit> body;

    bool operator==(const RepeatBlock &other) const;
};

using Operation = std::variant<Instruction, RepeatBlock>;

struct ParseOptions {
    /// Measurements already recorded before this text, for validating rec[-k] lookbacks.
    uint64_t prior_measurements = 0;
};

/// Parsed circuit: a list of instructions and REPEAT blocks. Immutable once built.
class Circuit {
  public:
    Circuit() = default;

    /// Parses circuit text. Throws ParseError (with a line number) on malformed input.
    static Circuit parse(std::string_view text, const ParseOptions &options = {});

    const std::vector<Operation> &operations() const {
        return operations_;
    }

    /// One more than the largest qubit target (0 for circuits without qubit targets).
    size_t num_qubits() const {
        return num_qubits_;
    }
    /// Number of measurement results produced by one execution, REPEAT multiplicity included.
    uint64_t num_measurements() const {
        return num_measurements_;
    }
    uint64_t num_detectors() const {
        return num_detectors_;
    }
    /// Number of instructions executed, REPEAT multiplicity included.
    uint64_t num_flat_instructions() const {
        return num_flat_instructions_;
    }

    /// Streams the instructions in execution order, expanding REPEAT blocks lazily.
    template <typename F>
    void for_each_flat(F &&callback) const {
        for (const Operation &op : operations_) {
            if (const Instruction *inst = std::get_if<Instruction>(&op)) {
                callback(*inst);
            } else {
                const RepeatBlock &block = std::get<RepeatBlock>(op);
                for (uint64_t k = 0; k < block.count; k++) {
                    block.body->for_each_flat(callback);
                }
            }
        }
    }

    /// For every DETECTOR in execution order, the absolute indices of the measurements it combines.
    std::vector<std::vector<uint64_t>> detector_sets() const;

    /// Canonical text form. Parsing it reproduces an equal circuit.
    std::string str() const;

    bool operator==(const Circuit &other) const;

  private:
    friend class CircuitParser;
    void append_operation(Operation op);

    std::vector<Operation> operations_;
    size_t num_qubits_ = 0;
    uint64_t num_measurements_ = 0;
    uint64_t num_detectors_ = 0;
    uint64_t num_flat_instructions_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Circuit &c);

}  // namespace stabsim

#endif
