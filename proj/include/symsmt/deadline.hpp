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

#ifndef SYMSMT_DEADLINE_HPP
#define SYMSMT_DEADLINE_HPP

#include <chrono>
#include <optional>

namespace symsmt {

using Clock = std::chrono::steady_clock;

/// A point in time after which cooperative work should stop. Default: never.
class Deadline {
 public:
  Deadline() = default;
  static Deadline never() { return Deadline(); }
  static Deadline at(Clock::time_point t) { return Deadline(t); }
  template <typename Rep, typename Period>
  static Deadline after(std::chrono::duration<Rep, Period> d) {
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(d));
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }
  bool bounded() const { return at_.has_value(); }
  std::optional<Clock::time_point> time() const { return at_; }

  /// The earlier of two deadlines.
  static Deadline earliest(const Deadline& a, const Deadline& b) {
    if (!a.at_) return b;
    if (!b.at_) return a;
    return *a.at_ <= *b.at_ ? a : b;
  }

 private:
  explicit Deadline(Clock::time_point t) : at_(t) {}
  std::optional<Clock::time_point> at_;
};

}  // namespace symsmt

#endif  // SYMSMT_DEADLINE_HPP
