/*
 * Copyright 2026 The bosonpd developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOSONPD_ERRORS_HPP
#define BOSONPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosonpd {

/// Bad arguments: wrong sizes, values outside their documented range.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size cap (see limits.hpp) or would overflow
/// the integer width used by an exact routine.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed at runtime, e.g. the imaginary residue of
/// a class sum exceeded its tolerance. Carries the offending residue.
class InvariantViolation : public std::runtime_error {
  public:
    explicit InvariantViolation(const std::string& message, double residue = 0.0)
        : std::runtime_error(message), residue_(residue) {}

    double residue() const { return residue_; }

  private:
    double residue_;
};

} // namespace bosonpd

#endif
