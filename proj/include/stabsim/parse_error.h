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

#ifndef STABSIM_PARSE_ERROR_H
#define STABSIM_PARSE_ERROR_H

#include <stdexcept>
#include <string>

namespace stabsim {

/// Raised for malformed text input. `line` and `column` are 1-based; 0 means "not applicable".
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string &message, size_t line, size_t column)
        : std::invalid_argument(format(message, line, column)), message(message), line(line), column(column) {
    }

    /// The description without the location prefix.
    std::string message;
    size_t line;
    size_t column;

  private:
    static std::string format(const std::string &message, size_t line, size_t column) {
        std::string prefix;
        if (line) {
            prefix += "line " + std::to_string(line);
        }
        if (column) {
            prefix += (prefix.empty() ? "column " : ", column ") + std::to_string(column);
        }
        return prefix.empty() ? message : prefix + ": " + message;
    }
};

}  // namespace stabsim

#endif
