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

#ifndef STABSIM_CLI_H
#define STABSIM_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabsim/sample_formats.h"

namespace stabsim {

struct CliConfig {
    enum class Mode { Sample, Detect, Repl, Bench };

    Mode mode = Mode::Sample;
    uint64_t shots = 1;
    SampleFormat format = SampleFormat::Dense01;
    std::optional<uint64_t> seed;
    std::string in_path;   // empty: read the input stream
    std::string out_path;  // empty: write the output stream

    std::string bench_filter;
    double bench_seconds = 0.5;
    std::string bench_reference_path;
};

/// Executes a parsed configuration. Returns the process exit code; diagnostics go to `err`.
int run(const CliConfig &config, std::istream &in, std::ostream &out, std::ostream &err);

/// Parses arguments (argv[0] is the program name) and runs. Usage errors return 2.
int main_with_args(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace stabsim

#endif
