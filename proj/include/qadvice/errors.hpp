// Copyright 2026 The qadvice Authors
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

#ifndef QADVICE_ERRORS_HPP_
#define QADVICE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qadvice {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table or strategy does not line up with the game it is used with
// (missing columns, arity mismatch, unknown symbols).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain, e.g. a correlator on
// non-binary outputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input data violates an invariant (prior does not sum to one, measurement
// effects are not positive, malformed file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The requested method does not support this game shape.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// The SDP solver could not certify an optimum.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double best_bound)
      : Error(what), best_bound_(best_bound) {}
  double best_bound() const { return best_bound_; }

 private:
  double best_bound_;
};

// The SDP is infeasible; the message names the violated constraint.
class InfeasibleError : public SolverError {
 public:
  InfeasibleError(const std::string& what, double residual)
      : SolverError(what, 0.0), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace qadvice

#endif  // QADVICE_ERRORS_HPP_
