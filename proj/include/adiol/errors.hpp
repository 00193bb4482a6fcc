// Copyright 2026 The adiol Authors
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

namespace adiol {

// Base of every error raised by the library. The CLI maps all of them to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |chi7| fell below the thrust guard, so beta(chi) is (nearly) singular.
class SingularThrust : public Error {
 public:
  SingularThrust(double thrust, double u_min);
  double thrust() const { return thrust_; }

 private:
  double thrust_;
};

class NonFiniteState : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

class UnstablePoleRequest : public Error {
 public:
  using Error::Error;
};

class EmptySeries : public Error {
 public:
  EmptySeries() : Error("time series is empty") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised by simulate() when integration cannot continue. Carries the index
// of the step that failed and the message of the underlying error.
class SimulationAborted : public Error {
 public:
  SimulationAborted(std::size_t step, double t, const std::string& cause);
  std::size_t step() const { return step_; }
  double time() const { return t_; }

 private:
  std::size_t step_;
  double t_;
};

}  // namespace adiol
