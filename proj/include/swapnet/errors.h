// Copyright 2026 The Swapnet Authors
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

#ifndef SWAPNET_ERRORS_H
#define SWAPNET_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swapnet {

/// Bad caller input: modulus < 2, non-prime where a prime is required,
/// malformed circuit text, dimension mismatch.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget before reaching a verdict.
class Inconclusive : public std::runtime_error {
   public:
    Inconclusive(const std::string &what, uint64_t steps_taken)
        : std::runtime_error(what), steps_(steps_taken) {
    }
    uint64_t steps_taken() const {
        return steps_;
    }

   private:
    uint64_t steps_;
};

/// Floating-point routine failed to meet its tolerance.
class NumericError : public std::runtime_error {
   public:
    NumericError(const std::string &what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {
    }
    double best_residual() const {
        return best_residual_;
    }

   private:
    double best_residual_;
};

/// Two routes that must agree did not.
class Mismatch : public std::runtime_error {
   public:
    Mismatch(const std::string &what, uint64_t first_index)
        : std::runtime_error(what), first_index_(first_index) {
    }
    uint64_t first_index() const {
        return first_index_;
    }

   private:
    uint64_t first_index_;
};

/// A proven mathematical fact failed to hold. Always a bug.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Requested object would not fit in the configured memory budget.
class SizeBudgetExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace swapnet

#endif
