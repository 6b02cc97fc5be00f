/*
 * Copyright 2026 The EAMEX Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EAMEX_CORE_ERROR_H_
#define EAMEX_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace eamex {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented invariant or precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. The message carries the offending line number.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& source, int line, const std::string& message)
      : ValidationError(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The model handle cannot answer the requested kind of query.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A precomputed table was queried with a row it does not store.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Communication with an external model process failed.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace eamex

#endif  // EAMEX_CORE_ERROR_H_
