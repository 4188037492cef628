// Copyright 2026 The decohere Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace decohere {

/// Base of every error raised by the library. Each subclass names one
/// failure class so callers can map them onto exit codes or retries.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A result would exceed the configured qubit capacity.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// A qubit subset is not a proper bipartition side where one is required.
class InvalidPartitionError : public Error {
  public:
    using Error::Error;
};

class SymmetryError : public Error {
  public:
    using Error::Error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// State family or matrix dimension outside the supported range.
class InvalidSizeError : public Error {
  public:
    using Error::Error;
};

class SizeMismatchError : public Error {
  public:
    using Error::Error;
};

class NonFiniteError : public Error {
  public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

/// Jacobi sweeps exhausted before the off-diagonal norm fell below tolerance.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// No closed form is known for the requested family/size; use the oracle.
class FormulaUnavailableError : public Error {
  public:
    using Error::Error;
};

/// Root search endpoints do not straddle the PPT/NPT transition.
class BracketError : public Error {
  public:
    using Error::Error;
};

/// Invalid experiment configuration. `where` carries the field path or the
/// parser position so the message can point at the offending input.
class ConfigError : public Error {
  public:
    ConfigError(std::string where, std::string detail)
        : Error(where.empty() ? detail : where + ": " + detail),
          where_(std::move(where)), detail_(std::move(detail)) {}

    [[nodiscard]] const std::string &where() const noexcept { return where_; }
    /// The message without the location prefix.
    [[nodiscard]] const std::string &detail() const noexcept { return detail_; }

  private:
    std::string where_;
    std::string detail_;
};

} // namespace decohere
