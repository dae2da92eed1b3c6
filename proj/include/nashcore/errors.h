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

#ifndef NASHCORE_ERRORS_H_
#define NASHCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace nashcore {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed its configured subset budget.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

class MalformedUtilityError : public Error {
 public:
  using Error::Error;
};

// A scoring rule or verifier was applied to utilities it does not support.
class RuleMismatchError : public Error {
 public:
  using Error::Error;
};

// k-mode versus budget-mode mismatch.
class ModeError : public Error {
 public:
  using Error::Error;
};

class NotABasisError : public Error {
 public:
  using Error::Error;
};

// A matroid oracle violated an axiom (detected during verification or when a
// basis-exchange matching could not be found).
class MatroidAxiomViolation : public Error {
 public:
  using Error::Error;
};

class CannotCompleteError : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstraintError : public Error {
 public:
  using Error::Error;
};

class EmptyFamilyError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class OutOfRegionError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (JSON, command-line values).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace nashcore

#endif  // NASHCORE_ERRORS_H_
