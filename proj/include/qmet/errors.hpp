// Copyright 2026 The qmet authors
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

#include <stdexcept>
#include <string>

namespace qmet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operator has non-finite entries or is otherwise not a usable matrix.
class InvalidOperatorError : public Error {
 public:
  using Error::Error;
};

// Operand dimensions do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar function was applied outside its domain (e.g. log of a
// non-positive eigenvalue). Carries the offending eigenvalue.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, double offending = 0.0)
      : Error(what), offending_eigenvalue_(offending) {}
  double offending_eigenvalue() const { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_ = 0.0;
};

// A configuration parameter is out of its allowed range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A state that must be full rank is rank deficient. Carries the 0-based
// index of the offending state within its containing list.
class RankError : public Error {
 public:
  explicit RankError(const std::string& what, int index = -1)
      : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_ = -1;
};

// A search space is too large to enumerate.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A dense simulation object would exceed the in-memory size guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A floating-point computation would overflow or lose all precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An annealing schedule is unusable (e.g. degenerate driver ground state).
class ScheduleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmet
