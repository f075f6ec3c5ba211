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

#ifndef STABSIM_SAMPLE_FORMATS_H
#define STABSIM_SAMPLE_FORMATS_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stabsim/bit_table.h"

namespace stabsim {

/// Shot-major table of sampled bits: row s holds the results of shot s.
struct SampleTable {
    SampleTable() = default;
    SampleTable(size_t num_shots, size_t num_results)
        : num_shots(num_shots), num_results(num_results), bits(num_shots, num_results) {
    }

    size_t num_shots = 0;
    size_t num_results = 0;
    BitTable bits;

    bool get(size_t shot, size_t result) const {
        return bits.get(shot, result);
    }
    void set(size_t shot, size_t result, bool value) {
        bits.set(shot, result, value);
    }
    bool operator==(const SampleTable &other) const {
        return num_shots == other.num_shots && num_results == other.num_results && bits == other.bits;
    }
};

enum class SampleFormat { Dense01, B8, Hits, R8 };

/// Accepts "01", "b8", "hits", "r8". Throws std::invalid_argument otherwise.
SampleFormat parse_sample_format(std::string_view name);
std::string_view sample_format_name(SampleFormat format);

/// Writes every shot in order.
///
///   01    one '0'/'1' character per result, then '\n'.
///   b8    ceil(num_results / 8) bytes per shot, least significant bit first, zero padded.
///   hits  ascending indices of the set bits, comma separated, then '\n'.
///   r8    run lengths: byte k < 255 means k zeros then a one; 255 means 255 zeros and no one.
///         Each shot ends with a virtual one at index num_results.
void write_samples(std::ostream &out, const SampleTable &table, SampleFormat format);
std::string format_samples(const SampleTable &table, SampleFormat format);

/// Inverse of format_samples. Throws std::invalid_argument on malformed data. b8 data with
/// num_results == 0 carries no shot boundaries and reads back as zero shots.
SampleTable read_samples(std::string_view data, SampleFormat format, size_t num_results);

/// XORs selected rows together: output row d is the XOR of `rows` at the indices in sets[d].
/// Throws std::invalid_argument for an index past the end of `rows`.
BitTable combine_rows(const BitTable &rows, const std::vector<std::vector<uint64_t>> &sets);

/// Detection events from measurement flips: event(shot, d) is the XOR of the flips of the
/// measurements in sets[d].
SampleTable detector_events(const SampleTable &flips, const std::vector<std::vector<uint64_t>> &sets);

/// Copies the first `num_shots` columns of a result-major table into a shot-major SampleTable.
SampleTable shots_from_result_major(const BitTable &result_major, size_t num_shots);

}  // namespace stabsim

#endif
