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

#include "stabsim/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "stabsim/parse_error.h"

namespace stabsim {

std::string GateTarget::str() const {
    if (is_record()) {
        return "rec[-" + std::to_string(value()) + "]";
    }
    return std::to_string(value());
}

bool Instruction::operator==(const Instruction &other) const {
    return gate == other.gate && arg == other.arg && targets == other.targets;
}

std::string Instruction::str() const {
    std::string result(gate->name);
    if (gate->parameter_count) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), arg);
        result += "(";
        result.append(buf, end);
        result += ")";
    }
    for (const GateTarget &t : targets) {
        result += " ";
        result += t.str();
    }
    return result;
}

bool RepeatBlock::operator==(const RepeatBlock &other) const {
    return count == other.count && *body == *other.body;
}

void Circuit::append_operation(Operation op) {
    if (const Instruction *inst = std::get_if<Instruction>(&op)) {
        for (const GateTarget &t : inst->targets) {
            if (!t.is_record()) {
                num_qubits_ = std::max(num_qubits_, static_cast<size_t>(t.value()) + 1);
            }
        }
        if (inst->gate->produces_results()) {
            num_measurements_ += inst->targets.size();
        }
        if (inst->gate->type == GateType::DETECTOR) {
            num_detectors_ += 1;
        }
        num_flat_instructions_ += 1;
    } else {
        const RepeatBlock &block = std::get<RepeatBlock>(op);
        num_qubits_ = std::max(num_qubits_, block.body->num_qubits_);
        num_measurements_ += block.count * block.body->num_measurements_;
        num_detectors_ += block.count * block.body->num_detectors_;
        num_flat_instructions_ += block.count * block.body->num_flat_instructions_;
    }
    operations_.push_back(std::move(op));
}

std::vector<std::vector<uint64_t>> Circuit::detector_sets() const {
    std::vector<std::vector<uint64_t>> result;
    uint64_t measured = 0;
    for_each_flat([&](const Instruction &inst) {
        if (inst.gate->produces_results()) {
            measured += inst.targets.size();
        } else if (inst.gate->type == GateType::DETECTOR) {
            std::vector<uint64_t> set;
            set.reserve(inst.targets.size());
            for (const GateTarget &t : inst.targets) {
                set.push_back(measured - t.value());
            }
            result.push_back(std::move(set));
        }
    });
    return result;
}

namespace {

void write_operations(const Circuit &c, std::string &out, size_t indent) {
    for (const Operation &op : c.operations()) {
        out.append(indent, ' ');
        if (const Instruction *inst = std::get_if<Instruction>(&op)) {
            out += inst->str();
            out += "\n";
        } else {
            const RepeatBlock &block = std::get<RepeatBlock>(op);
            out += "REPEAT " + std::to_string(block.count) + " {\n";
            write_operations(*block.body, out, indent + 4);
            out.append(indent, ' ');
            out += "}\n";
        }
    }
}

}  // namespace

std::string Circuit::str() const {
    std::string result;
    write_operations(*this, result, 0);
    return result;
}

bool Circuit::operator==(const Circuit &other) const {
    return operations_ == other.operations_;
}

std::ostream &operator<<(std::ostream &out, const Circuit &c) {
    return out << c.str();
}

class CircuitParser {
  public:
    CircuitParser(std::string_view text, uint64_t prior) : text_(text), measured_(prior) {
    }

    Circuit parse_all() {
        Circuit result = parse_block(0);
        return result;
    }

  private:
    [[noreturn]] void fail(const std::string &message, size_t pos) const {
        throw ParseError(message, line_number_, pos + 1);
    }

    bool next_line() {
        if (cursor_ > text_.size()) {
            return false;
        }
        size_t end = text_.find('\n', cursor_);
        if (end == std::string_view::npos) {
            end = text_.size();
        }
        line_ = text_.substr(cursor_, end - cursor_);
        cursor_ = end + 1;
        line_number_++;
        size_t hash = line_.find('#');
        if (hash != std::string_view::npos) {
            line_ = line_.substr(0, hash);
        }
        if (!line_.empty() && line_.back() == '\r') {
            line_.remove_suffix(1);
        }
        return true;
    }

    static bool is_space(char c) {
        return c == ' ' || c == '\t';
    }
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    size_t skip_spaces(size_t pos) const {
        while (pos < line_.size() && is_space(line_[pos])) {
            pos++;
        }
        return pos;
    }

    template <typename T>
    T parse_integer(std::string_view token, size_t pos, const char *what) const {
        T value{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            fail("expected " + std::string(what) + ", got '" + std::string(token) + "'", pos);
        }
        return value;
    }

    Circuit parse_block(size_t depth) {
        Circuit block;
        size_t open_line = line_number_;
        while (next_line()) {
            size_t pos = skip_spaces(0);
            if (pos == line_.size()) {
                continue;
            }
            if (line_[pos] == '}') {
                if (skip_spaces(pos + 1) != line_.size()) {
                    fail("unexpected text after '}'", skip_spaces(pos + 1));
                }
                if (depth == 0) {
                    fail("'}' without a matching REPEAT block", pos);
                }
                if (block.operations().empty()) {
                    fail("empty REPEAT block", pos);
                }
                return block;
            }
            size_t name_end = pos;
            while (name_end < line_.size() && is_name_char(line_[name_end])) {
                name_end++;
            }
            std::string_view name = line_.substr(pos, name_end - pos);
            if (name.empty()) {
                fail("expected a gate name", pos);
            }
            std::string upper(name);
            std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
                return static_cast<char>(std::toupper(c));
            });
            if (upper == "REPEAT") {
                parse_repeat(block, name_end, depth);
            } else {
                parse_instruction(block, name, pos, name_end);
            }
        }
        if (depth > 0) {
            throw ParseError("REPEAT block opened here is never closed", open_line, 0);
        }
        return block;
    }

    void parse_repeat(Circuit &block, size_t pos, size_t depth) {
        pos = skip_spaces(pos);
        size_t count_end = pos;
        while (count_end < line_.size() && std::isdigit(static_cast<unsigned char>(line_[count_end]))) {
            count_end++;
        }
        auto count = parse_integer<uint64_t>(line_.substr(pos, count_end - pos), pos, "a repetition count");
        if (count == 0) {
            fail("REPEAT count must be positive", pos);
        }
        pos = skip_spaces(count_end);
        if (pos >= line_.size() || line_[pos] != '{') {
            fail("expected '{' after the repetition count", pos);
        }
        if (skip_spaces(pos + 1) != line_.size()) {
            fail("unexpected text after '{'", skip_spaces(pos + 1));
        }
        uint64_t before = measured_;
        auto body = std::make_shared<Circuit>(parse_block(depth + 1));
        measured_ = before + count * body->num_measurements();
        block.append_operation(RepeatBlock{count, std::move(body)});
    }

    void parse_instruction(Circuit &block, std::string_view name, size_t name_pos, size_t pos) {
        const GateData *gate = find_gate(name);
        if (gate == nullptr) {
            fail("unknown gate '" + std::string(name) + "'", name_pos);
        }
        Instruction inst;
        inst.gate = gate;
        if (pos < line_.size() && line_[pos] == '(') {
            if (gate->parameter_count == 0) {
                fail("gate " + std::string(gate->name) + " takes no parameter", pos);
            }
            size_t close = line_.find(')', pos);
            if (close == std::string_view::npos) {
                fail("missing ')'", pos);
            }
            std::string_view token = line_.substr(pos + 1, close - pos - 1);
            size_t b = 0;
            while (b < token.size() && is_space(token[b])) b++;
            size_t e = token.size();
            while (e > b && is_space(token[e - 1])) e--;
            token = token.substr(b, e - b);
            double value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                fail("bad parameter '" + std::string(token) + "'", pos + 1);
            }
            if (!(value >= 0 && value <= 1)) {
                fail("probability " + std::string(token) + " is outside [0, 1]", pos + 1);
            }
            inst.arg = value;
            pos = close + 1;
        } else if (gate->parameter_count) {
            fail("gate " + std::string(gate->name) + " needs a parameter, e.g. " + std::string(gate->name) + "(0.01)", pos);
        }
        if (pos < line_.size() && !is_space(line_[pos])) {
            fail("expected whitespace before targets", pos);
        }

        bool is_detector = gate->type == GateType::DETECTOR;
        while (true) {
            pos = skip_spaces(pos);
            if (pos == line_.size()) {
                break;
            }
            size_t end = pos;
            while (end < line_.size() && !is_space(line_[end])) {
                end++;
            }
            std::string_view token = line_.substr(pos, end - pos);
            if (is_detector) {
                if (token.size() < 7 || token.substr(0, 5) != "rec[-" || token.back() != ']') {
                    fail("DETECTOR targets must look like rec[-k], got '" + std::string(token) + "'", pos);
                }
                auto k = parse_integer<uint32_t>(token.substr(5, token.size() - 6), pos, "a lookback k >= 1");
                if (k == 0 || k >= GateTarget::kRecordBit) {
                    fail("lookback must be at least 1", pos);
                }
                if (k > measured_) {
                    fail(
                        "rec[-" + std::to_string(k) + "] reaches back before the first measurement (only " +
                            std::to_string(measured_) + " so far)",
                        pos);
                }
                inst.targets.push_back(GateTarget::record(k));
            } else {
                if (token.starts_with("rec[")) {
                    fail("measurement record targets are only allowed on DETECTOR", pos);
                }
                auto q = parse_integer<uint32_t>(token, pos, "a qubit index");
                if (q >= GateTarget::kRecordBit) {
                    fail("qubit index too large", pos);
                }
                inst.targets.push_back(GateTarget::qubit(q));
            }
            pos = end;
        }
        if (inst.targets.empty()) {
            fail("gate " + std::string(gate->name) + " needs at least one target", pos);
        }
        if (inst.targets.size() % gate->arity) {
            fail(
                "gate " + std::string(gate->name) + " takes targets in groups of " + std::to_string(gate->arity) +
                    ", got " + std::to_string(inst.targets.size()),
                name_pos);
        }
        if (gate->arity == 2) {
            for (size_t k = 0; k < inst.targets.size(); k += 2) {
                if (inst.targets[k] == inst.targets[k + 1]) {
                    fail("two-qubit gate applied to qubit " + inst.targets[k].str() + " twice", name_pos);
                }
            }
        }
        if (gate->produces_results()) {
            measured_ += inst.targets.size();
        }
        block.append_operation(std::move(inst));
    }

    std::string_view text_;
    size_t cursor_ = 0;
    std::string_view line_;
    size_t line_number_ = 0;
    uint64_t measured_;
};

Circuit Circuit::parse(std::string_view text, const ParseOptions &options) {
    CircuitParser parser(text, options.prior_measurements);
    return parser.parse_all();
}

}  // namespace stabsim
