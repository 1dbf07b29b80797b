// Copyright 2026 The zfo Authors
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

namespace zfo {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A grid, label list or membership value does not form a valid relation.
class InvalidRelation : public Error {
 public:
  using Error::Error;
};

// Two relations were combined that are not defined over the same labels.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("family of relations is empty") {}
};

enum class Precondition {
  kNotAnOrder,
  kEqualPivots,
  kReversePositive,  // r(b,a) > 0 for a pivot (a,b)
  kZeroMembership,   // r(a,b) == 0 where a positive value is required
  kOutOfRange,       // element index does not belong to the carrier
};

const char* to_string(Precondition p) noexcept;

class PreconditionViolation : public Error {
 public:
  PreconditionViolation(Precondition which, const std::string& detail);

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

// Malformed matrix document. row/column are 1-based positions in the
// source (CSV line and cell, or JSON matrix row and entry); 0 when the
// error is not tied to a cell.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& message);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace zfo
