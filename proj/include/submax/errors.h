// Copyright 2026 The Authors.
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

#ifndef SUBMAX_ERRORS_H_
#define SUBMAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace submax {

// Raised when an EME vector would carry more fractional coordinates than its
// evaluation budget allows.
class FracBudgetError : public std::runtime_error {
 public:
  FracBudgetError(int frac, int cap);
  FracBudgetError(const std::string& message, int frac, int cap)
      : std::runtime_error(message), frac_(frac), cap_(cap) {}
  int frac() const { return frac_; }
  int cap() const { return cap_; }

 private:
  int frac_;
  int cap_;
};

// A documented precondition of an algorithm does not hold on its input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed instance, bad parameter, or a size outside the supported range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_H_
