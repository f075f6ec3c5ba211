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

#include "stabsim/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stabsim/bench.h"
#include "stabsim/circuit.h"
#include "stabsim/frame_simulator.h"
#include "stabsim/parse_error.h"
#include "stabsim/tableau_simulator.h"

namespace stabsim {

namespace {

std::string read_all(std::istream &in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int brace_delta(const std::string &line) {
    std::string_view code = line;
    size_t hash = code.find('#');
    if (hash != std::string_view::npos) {
        code = code.substr(0, hash);
    }
    int delta = 0;
    for (char c : code) {
        delta += c == '{';
        delta -= c == '}';
    }
    return delta;
}

int run_repl(const CliConfig &config, std::istream &in, std::ostream &out, std::ostream &err) {
    Rng rng = make_rng(config.seed);
    TableauSimulator sim(0, Rng(rng()));
    int status = 0;
    std::string pending;
    int depth = 0;
    size_t line_number = 0;
    size_t chunk_start = 1;
    for (std::string line; std::getline(in, line);) {
        line_number++;
        if (pending.empty()) {
            chunk_start = line_number;
        }
        pending += line;
        pending += "\n";
        depth += brace_delta(line);
        if (depth > 0) {
            continue;
        }
        depth = 0;
        std::string chunk = std::move(pending);
        pending.clear();
        try {
            Circuit c = Circuit::parse(chunk, ParseOptions{sim.measurement_record.size()});
            size_t before = sim.measurement_record.size();
            sim.run(c);
            if (sim.measurement_record.size() > before) {
                std::string bits;
                for (size_t k = before; k < sim.measurement_record.size(); k++) {
                    bits.push_back(sim.measurement_record[k] ? '1' : '0');
                }
                out << bits << "\n";
            }
            out.flush();
        } catch (const ParseError &e) {
            size_t line = chunk_start + (e.line ? e.line - 1 : 0);
            err << ParseError(e.message, line, e.column).what() << "\n";
            status = 1;
        } catch (const std::invalid_argument &e) {
            err << "line " << chunk_start << ": " << e.what() << "\n";
            status = 1;
        }
    }
    if (!pending.empty()) {
        err << "input ended inside a REPEAT block opened on line " << chunk_start << "\n";
        status = 1;
    }
    return status;
}

int run_bench(const CliConfig &config, std::ostream &out, std::ostream &err) {
    std::map<std::string, double> references;
    if (!config.bench_reference_path.empty()) {
        std::ifstream f(config.bench_reference_path);
        if (!f) {
            err << "can't open reference file " << config.bench_reference_path << "\n";
            return 1;
        }
        references = parse_bench_references(read_all(f));
    }
    std::vector<BenchResult> results = run_benchmarks(config.bench_filter, config.bench_seconds, references);
    if (results.empty()) {
        err << "no benchmark matches '" << config.bench_filter << "'\n";
        return 1;
    }
    out << format_bench_results(results);
    return 0;
}

int run_sampling(const CliConfig &config, std::istream &in, std::ostream &out) {
    Circuit circuit = Circuit::parse(read_all(in));
    Rng rng = make_rng(config.seed);
    SampleTable table = config.mode == CliConfig::Mode::Detect
                            ? sample_detection_events(circuit, config.shots, rng)
                            : sample_circuit(circuit, config.shots, rng);
    write_samples(out, table, config.format);
    out.flush();
    return out ? 0 : 1;
}

}  // namespace

int run(const CliConfig &config, std::istream &in, std::ostream &out, std::ostream &err) {
    try {
        if (config.mode == CliConfig::Mode::Bench) {
            return run_bench(config, out, err);
        }
        std::ifstream in_file;
        std::istream *src = &in;
        if (!config.in_path.empty()) {
            in_file.open(config.in_path);
            if (!in_file) {
                err << "can't open input file " << config.in_path << "\n";
                return 1;
            }
            src = &in_file;
        }
        std::ofstream out_file;
        std::ostream *dst = &out;
        if (!config.out_path.empty()) {
            out_file.open(config.out_path, std::ios::binary);
            if (!out_file) {
                err << "can't open output file " << config.out_path << "\n";
                return 1;
            }
            dst = &out_file;
        }
        if (config.mode == CliConfig::Mode::Repl) {
            return run_repl(config, *src, *dst, err);
        }
        int status = run_sampling(config, *src, *dst);
        if (status != 0) {
            err << "failed to write output\n";
        }
        return status;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_with_args(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer circuit sampler"};
    app.set_help_flag("-h,--help", "Show help");

    CliConfig config;
    std::optional<uint64_t> sample;
    std::optional<uint64_t> detect;
    bool repl = false;
    std::string format = "01";
    app.add_option("--sample", sample, "Sample N shots of the circuit's measurements")->check(CLI::PositiveNumber);
    app.add_option("--detect", detect, "Sample N shots of the circuit's detection events")->check(CLI::PositiveNumber);
    app.add_flag("--repl", repl, "Run instructions interactively, printing measurement results as they happen");
    app.add_option("--out_format", format, "Output format: 01, b8, hits or r8")
        ->check(CLI::IsMember({"01", "b8", "hits", "r8"}));
    app.add_option("--seed", config.seed, "Seed for the random number generator");
    app.add_option("--in", config.in_path, "Read the circuit from this file instead of stdin");
    app.add_option("--out", config.out_path, "Write results to this file instead of stdout");

    CLI::App *bench = app.add_subcommand("bench", "Run the micro-benchmarks");
    bench->add_option("--filter", config.bench_filter, "Only run benchmarks whose name contains this text");
    bench->add_option("--seconds", config.bench_seconds, "Time spent on each benchmark")->check(CLI::PositiveNumber);
    bench->add_option("--reference", config.bench_reference_path, "JSON file of reference nanoseconds per call");

    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (bench->parsed()) {
        config.mode = CliConfig::Mode::Bench;
        return run(config, in, out, err);
    }
    int modes = sample.has_value() + detect.has_value() + repl;
    if (modes != 1) {
        err << "exactly one of --sample=N, --detect=N, --repl is required\n";
        return 2;
    }
    if (sample) {
        config.mode = CliConfig::Mode::Sample;
        config.shots = *sample;
    } else if (detect) {
        config.mode = CliConfig::Mode::Detect;
        config.shots = *detect;
    } else {
        config.mode = CliConfig::Mode::Repl;
    }
    config.format = parse_sample_format(format);
    return run(config, in, out, err);
}

}  // namespace stabsim
