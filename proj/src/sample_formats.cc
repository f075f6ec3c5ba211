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

#include "stabsim/sample_formats.h"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stabsim {

SampleFormat parse_sample_format(std::string_view name) {
    if (name == "01") return SampleFormat::Dense01;
    if (name == "b8") return SampleFormat::B8;
    if (name == "hits") return SampleFormat::Hits;
    if (name == "r8") return SampleFormat::R8;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "' (expected 01, b8, hits or r8)");
}

std::string_view sample_format_name(SampleFormat format) {
    switch (format) {
        case SampleFormat::Dense01:
            return "01";
        case SampleFormat::B8:
            return "b8";
        case SampleFormat::Hits:
            return "hits";
        case SampleFormat::R8:
            return "r8";
    }
    return "?";
}

namespace {

void append_shot(std::string &buf, BitView row, size_t num_results, SampleFormat format) {
    switch (format) {
        case SampleFormat::Dense01:
            for (size_t k = 0; k < num_results; k++) {
                buf.push_back(row.get(k) ? '1' : '0');
            }
            buf.push_back('\n');
            break;
        case SampleFormat::B8: {
            const uint8_t *bytes = reinterpret_cast<const uint8_t *>(row.data());
            buf.append(reinterpret_cast<const char *>(bytes), (num_results + 7) / 8);
            break;
        }
        case SampleFormat::Hits: {
            bool first = true;
            row.for_each_set_bit([&](size_t k) {
                if (!first) {
                    buf.push_back(',');
                }
                first = false;
                buf += std::to_string(k);
            });
            buf.push_back('\n');
            break;
        }
        case SampleFormat::R8: {
            size_t prev = 0;
            auto emit_gap_to = [&](size_t index) {
                size_t gap = index - prev;
                while (gap >= 255) {
                    buf.push_back(static_cast<char>(255));
                    gap -= 255;
                }
                buf.push_back(static_cast<char>(gap));
                prev = index + 1;
            };
            row.for_each_set_bit(emit_gap_to);
            emit_gap_to(num_results);
            break;
        }
    }
}

[[noreturn]] void bad_data(const std::string &message) {
    throw std::invalid_argument("malformed sample data: " + message);
}

std::vector<std::string_view> split_lines(std::string_view data) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < data.size()) {
        size_t end = data.find('\n', start);
        if (end == std::string_view::npos) {
            bad_data("missing final newline");
        }
        lines.push_back(data.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace

void write_samples(std::ostream &out, const SampleTable &table, SampleFormat format) {
    std::string buf;
    for (size_t s = 0; s < table.num_shots; s++) {
        append_shot(buf, table.bits[s], table.num_results, format);
        if (buf.size() > (1 << 16)) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::string format_samples(const SampleTable &table, SampleFormat format) {
    std::ostringstream out;
    write_samples(out, table, format);
    return out.str();
}

SampleTable read_samples(std::string_view data, SampleFormat format, size_t num_results) {
    switch (format) {
        case SampleFormat::Dense01: {
            std::vector<std::string_view> lines = split_lines(data);
            SampleTable table(lines.size(), num_results);
            for (size_t s = 0; s < lines.size(); s++) {
                if (lines[s].size() != num_results) {
                    bad_data("shot " + std::to_string(s) + " has " + std::to_string(lines[s].size()) + " results");
                }
                for (size_t k = 0; k < num_results; k++) {
                    char c = lines[s][k];
                    if (c != '0' && c != '1') {
                        bad_data("unexpected character in 01 data");
                    }
                    table.set(s, k, c == '1');
                }
            }
            return table;
        }
        case SampleFormat::B8: {
            size_t per_shot = (num_results + 7) / 8;
            if (per_shot == 0) {
                if (!data.empty()) {
                    bad_data("b8 data for zero results must be empty");
                }
                return SampleTable(0, 0);
            }
            if (data.size() % per_shot) {
                bad_data("b8 length isn't a multiple of the shot size");
            }
            SampleTable table(data.size() / per_shot, num_results);
            for (size_t s = 0; s < table.num_shots; s++) {
                for (size_t k = 0; k < num_results; k++) {
                    uint8_t byte = static_cast<uint8_t>(data[s * per_shot + k / 8]);
                    table.set(s, k, (byte >> (k % 8)) & 1);
                }
                for (size_t k = num_results; k < per_shot * 8; k++) {
                    if ((static_cast<uint8_t>(data[s * per_shot + k / 8]) >> (k % 8)) & 1) {
                        bad_data("b8 padding bits must be zero");
                    }
                }
            }
            return table;
        }
        case SampleFormat::Hits: {
            std::vector<std::string_view> lines = split_lines(data);
            SampleTable table(lines.size(), num_results);
            for (size_t s = 0; s < lines.size(); s++) {
                std::string_view line = lines[s];
                size_t start = 0;
                while (start < line.size()) {
                    size_t end = line.find(',', start);
                    if (end == std::string_view::npos) {
                        end = line.size();
                    }
                    size_t index = 0;
                    auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + end, index);
                    if (ec != std::errc{} || ptr != line.data() + end || start == end) {
                        bad_data("bad hit index in shot " + std::to_string(s));
                    }
                    if (index >= num_results) {
                        bad_data("hit index out of range in shot " + std::to_string(s));
                    }
                    table.set(s, index, true);
                    start = end + 1;
                    if (end + 1 == line.size() && end < line.size()) {
                        bad_data("trailing comma in shot " + std::to_string(s));
                    }
                }
            }
            return table;
        }
        case SampleFormat::R8: {
            std::vector<std::vector<size_t>> shots;
            size_t pos = 0;
            std::vector<size_t> current;
            for (char c : data) {
                uint8_t b = static_cast<uint8_t>(c);
                pos += b;
                if (b == 255) {
                    continue;
                }
                if (pos == num_results) {
                    shots.push_back(std::move(current));
                    current.clear();
                    pos = 0;
                    continue;
                }
                if (pos > num_results) {
                    bad_data("r8 run passes the end of the shot");
                }
                current.push_back(pos);
                pos++;
            }
            if (pos != 0 || !current.empty()) {
                bad_data("r8 data ends in the middle of a shot");
            }
            SampleTable table(shots.size(), num_results);
            for (size_t s = 0; s < shots.size(); s++) {
                for (size_t k : shots[s]) {
                    table.set(s, k, true);
                }
            }
            return table;
        }
    }
    bad_data("unknown format");
}

BitTable combine_rows(const BitTable &rows, const std::vector<std::vector<uint64_t>> &sets) {
    BitTable out(sets.size(), rows.num_minor());
    for (size_t d = 0; d < sets.size(); d++) {
        BitRef dst = out[d];
        for (uint64_t m : sets[d]) {
            if (m >= rows.num_major()) {
                throw std::invalid_argument(
                    "index " + std::to_string(m) + " is past the last of " + std::to_string(rows.num_major()) +
                    " rows");
            }
            dst ^= rows[m];
        }
    }
    return out;
}

SampleTable detector_events(const SampleTable &flips, const std::vector<std::vector<uint64_t>> &sets) {
    BitTable by_result = flips.bits.transposed();
    BitTable events = combine_rows(by_result, sets);
    return shots_from_result_major(events, flips.num_shots);
}

SampleTable shots_from_result_major(const BitTable &result_major, size_t num_shots) {
    if (num_shots > result_major.num_minor()) {
        throw std::invalid_argument("more shots requested than the table holds");
    }
    BitTable t = result_major.transposed();
    SampleTable out(num_shots, result_major.num_major());
    for (size_t s = 0; s < num_shots; s++) {
        out.bits[s].overwrite_with(t[s]);
    }
    return out;
}

}  // namespace stabsim
