// Copyright 2026 The spexm Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spexm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad vertex ids, bad vertex sets, malformed user strings.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A named-family constructor was called outside its parameter domain.
class FamilyDomainError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input exceeds a documented size guard (vertex cap, char_poly order, ...).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPatternError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Power iteration hit its cap. Carries the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double rho, double residual,
                   std::vector<double> iterate)
      : Error(what), rho_(rho), residual_(residual), iterate_(std::move(iterate)) {}
  double rho() const noexcept { return rho_; }
  double residual() const noexcept { return residual_; }
  const std::vector<double>& iterate() const noexcept { return iterate_; }

 private:
  double rho_;
  double residual_;
  std::vector<double> iterate_;
};

/// An internal consistency check failed in a way that would contradict a
/// proven statement. Always surfaced, never swallowed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive work request above the configured cost cap.
class RefusedError : public Error {
 public:
  RefusedError(const std::string& what, double estimated_classes)
      : Error(what), estimate_(estimated_classes) {}
  double estimated_classes() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace spexm
