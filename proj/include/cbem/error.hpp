// Copyright 2026 The cbem3d Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Zero-area or collinear triangle. `element()` is 1-based, 0 when unknown.
class DegenerateElementError : public Error {
 public:
  explicit DegenerateElementError(const std::string& message, std::size_t element = 0);
  std::size_t element() const noexcept { return element_; }

 private:
  std::size_t element_;
};

/// Material parameters outside their admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated at coincident source and field points.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent problem definition (boundary condition cover, indices, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dense factorization hit an exactly zero pivot.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cbem
