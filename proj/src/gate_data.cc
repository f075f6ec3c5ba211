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

#include "stabsim/gate_data.h"

#include <cctype>
#include <cmath>

namespace stabsim {

namespace {

using C = std::complex<double>;
constexpr C i1{0, 1};
const double kS = std::sqrt(0.5);

std::array<uint8_t, 4> derive_frame_rule(const Tableau &t) {
    std::array<uint8_t, 4> rule{};
    for (size_t k = 0; k < t.num_qubits; k++) {
        for (size_t q = 0; q < t.num_qubits; q++) {
            if (t.xs.xt.get(k, q)) rule[2 * q] |= 1 << (2 * k);
            if (t.xs.zt.get(k, q)) rule[2 * q + 1] |= 1 << (2 * k);
            if (t.zs.xt.get(k, q)) rule[2 * q] |= 1 << (2 * k + 1);
            if (t.zs.zt.get(k, q)) rule[2 * q + 1] |= 1 << (2 * k + 1);
        }
    }
    return rule;
}

GateData unitary_gate(
    GateType type,
    std::string_view name,
    GateType inverse,
    std::vector<std::string> x_images,
    std::vector<std::string> z_images,
    std::vector<C> matrix) {
    GateData g;
    g.type = type;
    g.name = name;
    g.flags = kGateUnitary;
    g.arity = static_cast<uint8_t>(x_images.size());
    g.parameter_count = 0;
    g.inverse = inverse;
    g.x_images = std::move(x_images);
    g.z_images = std::move(z_images);
    g.unitary = std::move(matrix);
    g.cached_tableau = Tableau::from_text(g.x_images, g.z_images);
    g.frame_rule = derive_frame_rule(g.cached_tableau);
    return g;
}

GateData other_gate(GateType type, std::string_view name, uint8_t flags, uint8_t arity, uint8_t params) {
    GateData g;
    g.type = type;
    g.name = name;
    g.flags = flags;
    g.arity = arity;
    g.parameter_count = params;
    g.inverse = type;
    return g;
}

GateData noise_gate(GateType type, std::string_view name, uint8_t arity, std::vector<uint8_t> paulis) {
    GateData g = other_gate(type, name, kGateNoise, arity, 1);
    g.noise_paulis = std::move(paulis);
    return g;
}

std::vector<GateData> build_registry() {
    std::vector<GateData> r;
    using enum GateType;
    r.push_back(unitary_gate(I, "I", I, {"+X"}, {"+Z"}, {1, 0, 0, 1}));
    r.push_back(unitary_gate(X, "X", X, {"+X"}, {"-Z"}, {0, 1, 1, 0}));
    r.push_back(unitary_gate(Y, "Y", Y, {"-X"}, {"-Z"}, {0, -i1, i1, 0}));
    r.push_back(unitary_gate(Z, "Z", Z, {"-X"}, {"+Z"}, {1, 0, 0, -1}));
    r.push_back(unitary_gate(H, "H", H, {"+Z"}, {"+X"}, {kS, kS, kS, -kS}));
    r.push_back(unitary_gate(H_YZ, "H_YZ", H_YZ, {"-X"}, {"+Y"}, {kS, -i1 * kS, i1 * kS, -kS}));
    r.push_back(unitary_gate(S, "S", S_DAG, {"+Y"}, {"+Z"}, {1, 0, 0, i1}));
    r.push_back(unitary_gate(S_DAG, "S_DAG", S, {"-Y"}, {"+Z"}, {1, 0, 0, -i1}));
    r.push_back(unitary_gate(
        SQRT_Y,
        "SQRT_Y",
        SQRT_Y_DAG,
        {"-Z"},
        {"+X"},
        {C{0.5, 0.5}, C{-0.5, -0.5}, C{0.5, 0.5}, C{0.5, 0.5}}));
    r.push_back(unitary_gate(
        SQRT_Y_DAG,
        "SQRT_Y_DAG",
        SQRT_Y,
        {"+Z"},
        {"-X"},
        {C{0.5, -0.5}, C{0.5, -0.5}, C{-0.5, 0.5}, C{0.5, -0.5}}));
    r.push_back(unitary_gate(
        CNOT,
        "CNOT",
        CNOT,
        {"+XX", "+_X"},
        {"+Z_", "+ZZ"},
        {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}));
    r.push_back(unitary_gate(
        CY,
        "CY",
        CY,
        {"+XY", "+ZX"},
        {"+Z_", "+ZZ"},
        {1, 0, 0, 0, 0, 0, 0, -i1, 0, 0, 1, 0, 0, i1, 0, 0}));
    r.push_back(unitary_gate(
        CZ,
        "CZ",
        CZ,
        {"+XZ", "+ZX"},
        {"+Z_", "+_Z"},
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}));
    r.push_back(unitary_gate(
        SWAP,
        "SWAP",
        SWAP,
        {"+_X", "+X_"},
        {"+_Z", "+Z_"},
        {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
    r.push_back(other_gate(M, "M", kGateCollapsing | kGateProducesResults, 1, 0));
    r.push_back(other_gate(R, "R", kGateCollapsing, 1, 0));
    r.push_back(other_gate(MR, "MR", kGateCollapsing | kGateProducesResults, 1, 0));
    r.push_back(noise_gate(X_ERROR, "X_ERROR", 1, {1}));
    r.push_back(noise_gate(Y_ERROR, "Y_ERROR", 1, {3}));
    r.push_back(noise_gate(Z_ERROR, "Z_ERROR", 1, {2}));
    r.push_back(noise_gate(DEPOLARIZE1, "DEPOLARIZE1", 1, {1, 3, 2}));
    std::vector<uint8_t> two_qubit;
    for (uint8_t k = 1; k < 16; k++) {
        two_qubit.push_back(k);
    }
    r.push_back(noise_gate(DEPOLARIZE2, "DEPOLARIZE2", 2, std::move(two_qubit)));
    r.push_back(other_gate(DETECTOR, "DETECTOR", kGateAnnotation, 1, 0));
    for (size_t k = 0; k < r.size(); k++) {
        if (static_cast<size_t>(r[k].type) != k) {
            throw std::logic_error("gate registry out of order at " + std::string(r[k].name));
        }
    }
    return r;
}

const std::vector<GateData> &registry() {
    static const std::vector<GateData> gates = build_registry();
    return gates;
}

bool equal_ignoring_case(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t k = 0; k < a.size(); k++) {
        if (std::toupper(static_cast<unsigned char>(a[k])) != std::toupper(static_cast<unsigned char>(b[k]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

const Tableau &GateData::tableau() const {
    if (!is_unitary()) {
        throw std::invalid_argument("gate " + std::string(name) + " has no tableau");
    }
    return cached_tableau;
}

const GateData &gate_data(GateType type) {
    return registry()[static_cast<size_t>(type)];
}

std::span<const GateData> all_gates() {
    return registry();
}

const GateData *find_gate(std::string_view name) {
    if (equal_ignoring_case(name, "CX")) {
        return &gate_data(GateType::CNOT);
    }
    for (const GateData &g : registry()) {
        if (equal_ignoring_case(name, g.name)) {
            return &g;
        }
    }
    return nullptr;
}

}  // namespace stabsim
