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

#include "stabsim/entropy.h"

#include <algorithm>

namespace stabsim {

namespace {

void clear_tail(BitRef dst, size_t num_bits) {
    uint64_t *w = dst.data();
    size_t k = num_bits >> 6;
    if (num_bits & 63) {
        w[k] &= (uint64_t{1} << (num_bits & 63)) - 1;
        k++;
    }
    std::fill(w + k, w + dst.num_u64(), uint64_t{0});
}

void fill_ones(BitRef dst, size_t num_bits) {
    uint64_t *w = dst.data();
    std::fill(w, w + ((num_bits + 63) >> 6), ~uint64_t{0});
    clear_tail(dst, num_bits);
}

void require_fits(BitRef dst, size_t num_bits) {
    if (num_bits > dst.num_bits_padded()) {
        throw std::invalid_argument("bit count exceeds destination size");
    }
}

}  // namespace

Rng make_rng(std::optional<uint64_t> seed) {
    if (seed.has_value()) {
        return Rng(*seed);
    }
    std::random_device device;
    std::seed_seq seq{device(), device(), device(), device()};
    return Rng(seq);
}

ProbabilitySplit ProbabilitySplit::of(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("probability outside [0, 1]");
    }
    ProbabilitySplit s{};
    s.p = p;
    s.trunc_numerator = static_cast<uint32_t>(std::floor(p * 256));
    s.p_trunc = s.trunc_numerator / 256.0;
    s.p_refine = s.trunc_numerator >= 256 ? 0.0 : (p - s.p_trunc) / (1 - s.p_trunc);
    return s;
}

std::vector<uint64_t> sample_hits_geometric(uint64_t num_trials, double p, Rng &rng) {
    std::vector<uint64_t> hits;
    for_each_hit_geometric(num_trials, p, rng, [&](uint64_t k) {
        hits.push_back(k);
    });
    return hits;
}

void fill_bernoulli_geometric(BitRef dst, size_t num_bits, double p, Rng &rng) {
    require_fits(dst, num_bits);
    dst.clear();
    uint64_t *w = dst.data();
    for_each_hit_geometric(num_bits, p, rng, [&](uint64_t k) {
        w[k >> 6] |= uint64_t{1} << (k & 63);
    });
}

void fill_bernoulli_hybrid(BitRef dst, size_t num_bits, double p, Rng &rng) {
    require_fits(dst, num_bits);
    ProbabilitySplit split = ProbabilitySplit::of(p);
    if (split.trunc_numerator >= 256) {
        fill_ones(dst, num_bits);
        return;
    }
    uint64_t *w = dst.data();
    size_t words = (num_bits + 63) >> 6;
    uint32_t k = split.trunc_numerator;
    if (k == 0) {
        std::fill(w, w + words, uint64_t{0});
    } else {
        // Each of the 64 lanes gets an 8-bit uniform value r, spread over 8 words (bit j of r in
        // word j); the lane's bit is r < k, evaluated most significant bit first.
        for (size_t i = 0; i < words; i++) {
            uint64_t less = 0;
            uint64_t equal = ~uint64_t{0};
            for (int j = 7; j >= 0; j--) {
                uint64_t r = rng();
                uint64_t kb = ((k >> j) & 1) ? ~uint64_t{0} : 0;
                less |= equal & ~r & kb;
                equal &= ~(r ^ kb);
            }
            w[i] = less;
        }
    }
    clear_tail(dst, num_bits);
    for_each_hit_geometric(num_bits, split.p_refine, rng, [&](uint64_t b) {
        w[b >> 6] |= uint64_t{1} << (b & 63);
    });
}

void biased_randomize_bits(BitRef dst, size_t num_bits, double p, Rng &rng) {
    require_fits(dst, num_bits);
    if (p <= 0) {
        dst.clear();
    } else if (p >= 1) {
        fill_ones(dst, num_bits);
    } else if (p > kComplementAbove) {
        biased_randomize_bits(dst, num_bits, 1 - p, rng);
        uint64_t *w = dst.data();
        for (size_t i = 0; i < ((num_bits + 63) >> 6); i++) {
            w[i] = ~w[i];
        }
        clear_tail(dst, num_bits);
    } else if (p < kGeometricBelow) {
        fill_bernoulli_geometric(dst, num_bits, p, rng);
    } else {
        fill_bernoulli_hybrid(dst, num_bits, p, rng);
    }
}

}  // namespace stabsim
