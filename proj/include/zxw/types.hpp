// Copyright 2026 The zxwkit Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace zxw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Per-entry absolute tolerance used when comparing evaluated diagrams.
inline constexpr double kEvalTolerance = 1e-10;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator or composition was requested with arities that do not fit.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the domain of a constructor or rule.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Evaluation would exceed the configured boundary-qubit cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Runtime knobs shared by the evaluator, the verifiers and the CLI.
struct Config {
  std::size_t qubit_cap = 12;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  /// Applies ZXW_CAP / ZXW_TOL overrides from the environment.
  static Config from_env(Config base);
  static Config from_env() { return from_env(Config{}); }

  /// Throws ParameterError unless cap >= 1 and tolerance > 0.
  void check() const;
};

}  // namespace zxw
