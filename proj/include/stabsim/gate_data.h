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

#ifndef STABSIM_GATE_DATA_H
#define STABSIM_GATE_DATA_H

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabsim/tableau.h"

namespace stabsim {

enum class GateType : uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    H_YZ,
    S,
    S_DAG,
    SQRT_Y,
    SQRT_Y_DAG,
    CNOT,
    CY,
    CZ,
    SWAP,
    M,
    R,
    MR,
    X_ERROR,
    Y_ERROR,
    Z_ERROR,
    DEPOLARIZE1,
    DEPOLARIZE2,
    DETECTOR,
};

constexpr size_t kNumGateTypes = static_cast<size_t>(GateType::DETECTOR) + 1;

enum GateFlags : uint8_t {
    kGateUnitary = 1 << 0,
    kGateCollapsing = 1 << 1,
    kGateNoise = 1 << 2,
    kGateAnnotation = 1 << 3,
    kGateProducesResults = 1 << 4,
};

/// Static description of one gate. The registry built from these is used by the parser, both
/// simulators, and the tests.
struct GateData {
    GateType type;
    std::string_view name;
    uint8_t flags;
    /// Targets consumed per application (1 or 2). Broadcasting applies the gate to consecutive groups.
    uint8_t arity;
    uint8_t parameter_count;
    /// Unitary gates only: the gate implementing the adjoint.
    GateType inverse;
    /// Unitary gates only: images of X_k and Z_k under P -> U P U†, as signed Pauli strings.
    std::vector<std::string> x_images;
    std::vector<std::string> z_images;
    /// Unitary gates only: dense matrix, row-major, with targets[0] as the least significant bit.
    std::vector<std::complex<double>> unitary;
    /// Noise gates only: Pauli applied on a hit, one chosen uniformly. Entry k holds the Pauli on
    /// target j in bits 2j (x) and 2j+1 (z).
    std::vector<uint8_t> noise_paulis;
    /// Unitary gates only: how the gate mixes error-frame bit planes, ignoring signs. Planes are
    /// numbered x_0, z_0, x_1, z_1; bit i of frame_rule[r] says input plane i feeds output plane r.
    std::array<uint8_t, 4> frame_rule{};

    bool is_unitary() const {
        return flags & kGateUnitary;
    }
    bool is_noise() const {
        return flags & kGateNoise;
    }
    bool produces_results() const {
        return flags & kGateProducesResults;
    }
    /// Unitary gates only: the tableau built from x_images and z_images. Throws for other gates.
    const Tableau &tableau() const;

    Tableau cached_tableau;
};

const GateData &gate_data(GateType type);
/// Every registered gate, in GateType order.
std::span<const GateData> all_gates();
/// Case-insensitive lookup including aliases (CX for CNOT). Returns nullptr when unknown.
const GateData *find_gate(std::string_view name);

}  // namespace stabsim

#endif
