/* Copyright (C) 2026 The hyperquad authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hq {

// Every failure raised by the library derives from Error; the C API maps the
// concrete type to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: non-prime p, r not a power of p, out-of-range index.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Field construction failed (reducible or non-monic modulus, characteristic 2).
class FieldError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a series operation needs coefficients below the known floor.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, long long needed_floor)
      : Error(what), needed_floor_(needed_floor) {}
  long long needed_floor() const { return needed_floor_; }

 private:
  long long needed_floor_;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// A finite continued fraction of constants whose suffix vanishes.
class UndefinedBracket : public Error {
 public:
  UndefinedBracket(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// A spec whose expansion does not follow the perfect pattern, with the first index where
// the recursions break down.
class NotPerfectError : public Error {
 public:
  NotPerfectError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Should be unreachable; signals a broken invariant inside the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hq
