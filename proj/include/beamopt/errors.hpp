// SPDX-License-Identifier: Apache-2.0
//
// beamopt - received-power-optimal antenna beamwidths for clustered mmWave links
// Copyright (C) 2026 the beamopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace beamopt {

// All beamopt errors carry a stable machine-readable category string that the
// CLI maps to an exit code. The what() text is for humans.
class Error : public std::runtime_error {
  public:
    Error(std::string category, const std::string &message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string &category() const noexcept { return category_; }

  private:
    std::string category_;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string &m) : Error("domain", m) {}
};

// A bracketing root solve was requested but the bracket holds no sign change.
struct NoRootError : Error {
    explicit NoRootError(const std::string &m) : Error("no-root", m) {}
};

// Non-finite intermediate value, lost convergence, or similar numerical failure.
struct NumericError : Error {
    explicit NumericError(const std::string &m) : Error("numeric", m) {}
};

// Too few usable samples / rows for the requested computation.
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string &m) : Error("insufficient-data", m) {}
};

// Least-squares model fit produced a degenerate model.
struct FitFailedError : Error {
    explicit FitFailedError(const std::string &m) : Error("fit-failed", m) {}
};

// Malformed input file.
struct FormatError : Error {
    explicit FormatError(const std::string &m) : Error("format", m) {}
};

// The beamwidth optimizer could not isolate a maximum.
struct OptimizationFailedError : Error {
    explicit OptimizationFailedError(const std::string &m) : Error("optimization-failed", m) {}
};

} // namespace beamopt
