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

#ifndef STABSIM_ENTROPY_H
#define STABSIM_ENTROPY_H

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stabsim/bit_buffer.h"

namespace stabsim {

using Rng = std::mt19937_64;

/// Seeded generator, or one seeded from std::random_device when no seed is given.
Rng make_rng(std::optional<uint64_t> seed);

/// Uniform double in (0, 1].
inline double uniform_open_closed(Rng &rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

/// Splits p into a multiple of 1/256 and a refinement probability that restores p when ORed in.
struct ProbabilitySplit {
    double p;
    uint32_t trunc_numerator;  // floor(256 p), in 0..256
    double p_trunc;            // trunc_numerator / 256
    double p_refine;           // (p - p_trunc) / (1 - p_trunc), or 0 when p_trunc == 1

    static ProbabilitySplit of(double p);
};

// Path thresholds for biased_randomize_bits.
constexpr double kGeometricBelow = 0.02;
constexpr double kComplementAbove = 0.5;

/// Calls `callback(index)` for each index in [0, num_trials) hit independently with probability p,
/// in ascending order. Draws geometric gaps, so the expected cost is proportional to num_trials*p + 1.
template <typename F>
void for_each_hit_geometric(uint64_t num_trials, double p, Rng &rng, F &&callback) {
    if (!(p > 0) || num_trials == 0) {
        return;
    }
    if (p >= 1) {
        for (uint64_t k = 0; k < num_trials; k++) {
            callback(k);
        }
        return;
    }
    double log_miss = std::log1p(-p);
    uint64_t pos = 0;
    while (true) {
        double gap = std::floor(std::log(uniform_open_closed(rng)) / log_miss);
        if (!(gap < static_cast<double>(num_trials - pos))) {
            return;
        }
        pos += static_cast<uint64_t>(gap);
        callback(pos);
        pos++;
        if (pos >= num_trials) {
            return;
        }
    }
}

std::vector<uint64_t> sample_hits_geometric(uint64_t num_trials, double p, Rng &rng);

/// Overwrites the first `num_bits` bits of `dst` with Bernoulli(p) bits using gap sampling, and
/// zeroes the rest of the range.
void fill_bernoulli_geometric(BitRef dst, size_t num_bits, double p, Rng &rng);

/// Overwrites the first `num_bits` bits of `dst` with Bernoulli(p) bits: each bit is (uniform byte <
/// floor(256 p)) ORed with a sparse refinement hit of probability p_refine. Zeroes the rest.
void fill_bernoulli_hybrid(BitRef dst, size_t num_bits, double p, Rng &rng);

/// Bernoulli(p) fill that picks the cheapest exact path for p: gap sampling for small p, the hybrid
/// for intermediate p, and the complement of a (1 - p) fill for large p.
void biased_randomize_bits(BitRef dst, size_t num_bits, double p, Rng &rng);

}  // namespace stabsim

#endif
