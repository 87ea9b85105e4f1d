/*
 * Copyright 2026 The semilin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMILIN_ERRORS_HPP
#define SEMILIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semilin {

// Base for every error raised by the library. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller: bad dimensions, non-prime
// characteristic, reducible modulus, profile out of range, mixed fields.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input (field spec, matrix blocks).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request: division by zero, inverse of a singular
// matrix, a tuple outside every X(r,s).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An identity that must always hold was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace semilin

#endif  // SEMILIN_ERRORS_HPP
