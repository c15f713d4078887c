// Copyright 2026 The symsmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMSMT_ERRORS_HPP
#define SYMSMT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symsmt {

/// Malformed SMT-LIB input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Well-formed input that uses a command or operator outside the fragment.
class UnsupportedFeature : public std::runtime_error {
 public:
  explicit UnsupportedFeature(const std::string& feature)
      : std::runtime_error("unsupported feature: " + feature), feature_(feature) {}
  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

class SortMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration ran past its configured cap.
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer evaluation left the 64-bit range.
class EvaluationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symsmt

#endif  // SYMSMT_ERRORS_HPP
